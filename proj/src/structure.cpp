#include "tuvote/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tuvote {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0), row_labels_(rows), col_labels_(cols) {}

BinaryMatrix::BinaryMatrix(std::vector<std::vector<std::uint8_t>> rows, std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels)
    : rows_(rows.size()), cols_(rows.empty() ? col_labels.size() : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged binary matrix");
    for (auto v : row) {
      if (v > 1) throw std::invalid_argument("binary matrix entry outside {0,1}");
      entries_.push_back(v);
    }
  }
  row_labels_ = row_labels.empty() ? std::vector<std::string>(rows_) : std::move(row_labels);
  col_labels_ = col_labels.empty() ? std::vector<std::string>(cols_) : std::move(col_labels);
  if (row_labels_.size() != rows_ || col_labels_.size() != cols_) {
    throw std::invalid_argument("label count does not match matrix dimensions");
  }
}

std::vector<std::uint8_t> BinaryMatrix::row(std::size_t r) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

void BinaryMatrix::append_row(const std::vector<std::uint8_t>& row, std::string label) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  entries_.insert(entries_.end(), row.begin(), row.end());
  row_labels_.push_back(std::move(label));
  ++rows_;
}

bool BinaryMatrix::has_strong_c1p() const {
  std::vector<std::size_t> identity(cols_);
  for (std::size_t j = 0; j < cols_; ++j) identity[j] = j;
  return has_strong_c1p(identity);
}

bool BinaryMatrix::has_strong_c1p(const std::vector<std::size_t>& permutation) const {
  if (permutation.size() != cols_) return false;
  std::vector<bool> seen(cols_, false);
  for (auto c : permutation) {
    if (c >= cols_ || seen[c]) return false;
    seen[c] = true;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    // 0 = before the block, 1 = inside, 2 = after.
    int phase = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      bool one = (*this)(r, permutation[j]) != 0;
      if (one && phase == 2) return false;
      if (one) phase = 1;
      else if (phase == 1) phase = 2;
    }
  }
  return true;
}

SignedMatrix::SignedMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

SignedMatrix::SignedMatrix(const std::vector<std::vector<int>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (int v : row) {
      if (v < -1 || v > 1) throw std::invalid_argument("matrix entry " + std::to_string(v) + " outside {-1,0,1}");
      entries_.push_back(static_cast<std::int8_t>(v));
    }
  }
}

SignedMatrix SignedMatrix::from_binary(const BinaryMatrix& m) {
  SignedMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c));
  }
  return out;
}

void SignedMatrix::set(std::size_t r, std::size_t c, int value) {
  if (value < -1 || value > 1) throw std::invalid_argument("matrix entry outside {-1,0,1}");
  entries_[r * cols_ + c] = static_cast<std::int8_t>(value);
}

SignedMatrix SignedMatrix::transposed() const {
  SignedMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  }
  return out;
}

SignedMatrix SignedMatrix::submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
  SignedMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries_[i * cols.size() + j] = entries_.at(rows[i] * cols_ + cols[j]);
  }
  return out;
}

SignedMatrix SignedMatrix::hconcat(const SignedMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row counts differ");
  SignedMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, (*this)(r, c));
    for (std::size_t c = 0; c < other.cols_; ++c) out.set(r, cols_ + c, other(r, c));
  }
  return out;
}

SignedMatrix SignedMatrix::negated() const {
  SignedMatrix out = *this;
  for (auto& v : out.entries_) v = static_cast<std::int8_t>(-v);
  return out;
}

SignedMatrix SignedMatrix::identity(std::size_t n) {
  SignedMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

std::vector<std::vector<int>> SignedMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

SignedMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix text must start with '<rows> <cols>'");
  }
  std::vector<std::vector<int>> data(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
  for (auto& row : data) {
    for (auto& v : row) {
      if (!(in >> v)) throw std::invalid_argument("matrix text has fewer entries than declared");
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("matrix text has more entries than declared");
  if (rows == 0 || cols == 0) return SignedMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  return SignedMatrix(data);
}

std::string serialize(const SignedMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

BinaryMatrix to_binary(const SignedMatrix& m) {
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) < 0) throw std::invalid_argument("matrix has a -1 entry; expected 0/1");
      out.set(r, c, m(r, c) == 1);
    }
  }
  return out;
}

BinaryMatrix build_sp_matrix(const Profile& profile) {
  const std::size_t m = profile.num_alternatives();
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::string> labels;
  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    const WeakOrder& v = profile.voter(i);
    for (std::size_t t = 1; t <= v.num_classes(); ++t) {
      std::vector<std::uint8_t> row(m, 0);
      for (AltIndex c : v.top_initial_segment(t)) row[c] = 1;
      rows.push_back(std::move(row));
      labels.push_back("v" + std::to_string(i + 1) + ":t" + std::to_string(t));
    }
  }
  return BinaryMatrix(std::move(rows), std::move(labels), profile.alternatives());
}

BinaryMatrix build_sc_matrix(const Profile& profile) {
  if (!profile.all_linear()) throw std::invalid_argument("single-crossing matrix needs linear orders");
  const std::size_t m = profile.num_alternatives();
  const std::size_t n = profile.num_voters();
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::string> labels;
  for (AltIndex a = 0; a < m; ++a) {
    for (AltIndex b = 0; b < m; ++b) {
      if (a == b) continue;
      std::vector<std::uint8_t> row(n, 0);
      for (VoterIndex i = 0; i < n; ++i) row[i] = profile.voter(i).prefers(a, b) ? 1 : 0;
      rows.push_back(std::move(row));
      labels.push_back(profile.name(a) + ">" + profile.name(b));
    }
  }
  std::vector<std::string> voter_labels;
  for (VoterIndex i = 0; i < n; ++i) voter_labels.push_back("v" + std::to_string(i + 1));
  if (rows.empty()) return BinaryMatrix({}, {}, std::move(voter_labels));
  return BinaryMatrix(std::move(rows), std::move(labels), std::move(voter_labels));
}

BinaryMatrix build_ballot_matrix(const ApprovalProfile& profile) {
  const std::size_t m = profile.num_alternatives();
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::string> labels;
  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    std::vector<std::uint8_t> row(m, 0);
    for (AltIndex c : profile.ballot(i)) row[c] = 1;
    rows.push_back(std::move(row));
    labels.push_back("v" + std::to_string(i + 1));
  }
  return BinaryMatrix(std::move(rows), std::move(labels), profile.alternatives());
}

namespace {

template <typename T>
std::vector<T> canonical_orientation(std::vector<T> order) {
  std::vector<T> reversed(order.rbegin(), order.rend());
  return std::min(order, reversed);
}

bool positions_contiguous(std::vector<std::size_t> positions) {
  if (positions.empty()) return true;
  std::sort(positions.begin(), positions.end());
  return positions.back() - positions.front() + 1 == positions.size();
}

}  // namespace

std::optional<Axis> is_single_peaked(const Profile& profile) {
  auto perm = has_c1p(build_sp_matrix(profile));
  if (!perm) return std::nullopt;
  return canonical_orientation(std::move(*perm));
}

std::optional<Axis> is_candidate_interval(const ApprovalProfile& profile) {
  auto perm = has_c1p(build_ballot_matrix(profile));
  if (!perm) return std::nullopt;
  return canonical_orientation(std::move(*perm));
}

std::optional<VoterOrdering> is_single_crossing(const Profile& profile) {
  auto perm = has_c1p(build_sc_matrix(profile));
  if (!perm) return std::nullopt;
  return canonical_orientation(std::move(*perm));
}

bool axis_certifies_single_peaked(const Profile& profile, const Axis& axis) {
  const std::size_t m = profile.num_alternatives();
  if (axis.size() != m) return false;
  std::vector<std::size_t> pos(m, m);
  for (std::size_t p = 0; p < m; ++p) {
    if (axis[p] >= m || pos[axis[p]] != m) return false;
    pos[axis[p]] = p;
  }
  for (const auto& v : profile.voters()) {
    for (std::size_t t = 1; t <= v.num_classes(); ++t) {
      std::vector<std::size_t> positions;
      for (AltIndex c : v.top_initial_segment(t)) positions.push_back(pos[c]);
      if (!positions_contiguous(std::move(positions))) return false;
    }
  }
  return true;
}

bool axis_certifies_candidate_interval(const ApprovalProfile& profile, const Axis& axis) {
  const std::size_t m = profile.num_alternatives();
  if (axis.size() != m) return false;
  std::vector<std::size_t> pos(m, m);
  for (std::size_t p = 0; p < m; ++p) {
    if (axis[p] >= m || pos[axis[p]] != m) return false;
    pos[axis[p]] = p;
  }
  for (const auto& b : profile.ballots()) {
    std::vector<std::size_t> positions;
    for (AltIndex c : b) positions.push_back(pos[c]);
    if (!positions_contiguous(std::move(positions))) return false;
  }
  return true;
}

bool ordering_certifies_single_crossing(const Profile& profile, const VoterOrdering& ordering) {
  const std::size_t n = profile.num_voters();
  if (ordering.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto i : ordering) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  const std::size_t m = profile.num_alternatives();
  for (AltIndex a = 0; a < m; ++a) {
    for (AltIndex b = 0; b < m; ++b) {
      if (a == b) continue;
      std::vector<std::size_t> positions;
      for (std::size_t p = 0; p < n; ++p) {
        if (profile.voter(ordering[p]).prefers(a, b)) positions.push_back(p);
      }
      if (!positions_contiguous(std::move(positions))) return false;
    }
  }
  return true;
}

std::string to_string(TuVerdict verdict) {
  switch (verdict) {
    case TuVerdict::tu: return "tu";
    case TuVerdict::not_tu: return "not_tu";
    case TuVerdict::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace tuvote
