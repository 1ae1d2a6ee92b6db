#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

#include "tuvote/structure.hpp"

namespace tuvote {
namespace {

using boost::multiprecision::mpz_int;

// Backtracking search for signs s_r in {+1,-1} (r in subset) such that every
// column sum of s_r * a_rc lies in {-1, 0, 1}. The first sign is fixed to +1.
class SigningSearch {
 public:
  SigningSearch(const SignedMatrix& m, const std::vector<std::size_t>& subset)
      : m_(m), subset_(subset), sums_(m.cols(), 0), remaining_(m.cols(), 0) {
    for (auto r : subset_) {
      for (std::size_t c = 0; c < m_.cols(); ++c) remaining_[c] += m_(r, c) != 0;
    }
  }

  bool run() { return assign(0); }

 private:
  bool assign(std::size_t k) {
    if (k == subset_.size()) return true;
    const std::size_t r = subset_[k];
    for (int sign : {1, -1}) {
      if (k == 0 && sign == -1) break;
      bool ok = true;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        int a = m_(r, c);
        if (a == 0) continue;
        sums_[c] += sign * a;
        --remaining_[c];
        if (std::abs(sums_[c]) - remaining_[c] > 1) ok = false;
      }
      if (ok && assign(k + 1)) return true;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        int a = m_(r, c);
        if (a == 0) continue;
        sums_[c] -= sign * a;
        ++remaining_[c];
      }
    }
    return false;
  }

  const SignedMatrix& m_;
  const std::vector<std::size_t>& subset_;
  std::vector<int> sums_;
  std::vector<int> remaining_;
};

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Witness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  long long det = 0;
};

// Searches square submatrices with rows inside `subset` for |det| >= 2.
std::optional<Witness> find_det_witness(const SignedMatrix& m, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> cols;
  std::vector<std::vector<int>> seen;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<int> column;
    bool nonzero = false;
    for (auto r : subset) {
      column.push_back(m(r, c));
      nonzero |= m(r, c) != 0;
    }
    // Zero or repeated columns cannot be part of a nonsingular submatrix.
    if (!nonzero || std::find(seen.begin(), seen.end(), column) != seen.end()) continue;
    seen.push_back(std::move(column));
    cols.push_back(c);
  }

  std::optional<Witness> found;
  for (std::size_t size = 2; size <= subset.size() && !found; ++size) {
    for_each_combination(subset.size(), size, [&](const std::vector<std::size_t>& ri) {
      std::vector<std::size_t> rows;
      for (auto i : ri) rows.push_back(subset[i]);
      return for_each_combination(cols.size(), size, [&](const std::vector<std::size_t>& ci) {
        std::vector<std::size_t> picked;
        for (auto j : ci) picked.push_back(cols[j]);
        long long det = determinant(m.submatrix(rows, picked));
        if (std::llabs(det) >= 2) {
          found = Witness{rows, picked, det};
          return true;
        }
        return false;
      });
    });
  }
  return found;
}

}  // namespace

long long determinant(const SignedMatrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = square.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_int>> a(n, std::vector<mpz_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square(i, j);
  }
  // Bareiss fraction-free elimination; every division is exact.
  mpz_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  mpz_int det = a[n - 1][n - 1] * sign;
  return det.convert_to<long long>();
}

TuResult is_totally_unimodular(const SignedMatrix& input, std::size_t row_budget) {
  TuResult result;
  result.transposed = input.rows() > input.cols();
  const SignedMatrix m = result.transposed ? input.transposed() : input;

  if (m.rows() > row_budget) {
    result.verdict = TuVerdict::budget_exceeded;
    return result;
  }

  // Smallest violating subsets first, so the reported one is minimal.
  std::optional<std::vector<std::size_t>> violating;
  for (std::size_t size = 2; size <= m.rows() && !violating; ++size) {
    for_each_combination(m.rows(), size, [&](const std::vector<std::size_t>& subset) {
      if (SigningSearch(m, subset).run()) return false;
      violating = subset;
      return true;
    });
  }
  if (!violating) {
    result.verdict = TuVerdict::tu;
    return result;
  }

  result.verdict = TuVerdict::not_tu;
  result.violating_subset = *violating;
  auto witness = find_det_witness(m, *violating);
  if (!witness) throw std::logic_error("Ghouila-Houri violation without a determinant witness");
  result.witness_det = witness->det;
  if (result.transposed) {
    result.witness_rows = witness->cols;
    result.witness_cols = witness->rows;
  } else {
    result.witness_rows = witness->rows;
    result.witness_cols = witness->cols;
  }
  result.witness = input.submatrix(result.witness_rows, result.witness_cols);
  return result;
}

SignedMatrix tu_reduce(const SignedMatrix& input) {
  std::vector<std::vector<int>> rows = input.to_rows();
  std::size_t cols = input.cols();

  auto same_up_to_sign = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return true;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] != -b[k]) return false;
    }
    return true;
  };
  auto nonzeros = [](const std::vector<int>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
  };
  auto transpose = [&](const std::vector<std::vector<int>>& a, std::size_t ncols) {
    std::vector<std::vector<int>> t(ncols, std::vector<int>(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r) {
      for (std::size_t c = 0; c < ncols; ++c) t[c][r] = a[r][c];
    }
    return t;
  };
  // Removes lines with at most one non-zero and lines repeating an earlier one.
  auto reduce_lines = [&](std::vector<std::vector<int>>& lines) {
    std::vector<std::vector<int>> kept;
    for (auto& line : lines) {
      if (nonzeros(line) <= 1) continue;
      bool repeated = std::any_of(kept.begin(), kept.end(),
                                  [&](const std::vector<int>& k) { return same_up_to_sign(k, line); });
      if (!repeated) kept.push_back(std::move(line));
    }
    bool changed = kept.size() != lines.size();
    lines = std::move(kept);
    return changed;
  };

  bool changed = true;
  while (changed) {
    changed = reduce_lines(rows);
    auto columns = transpose(rows, cols);
    changed |= reduce_lines(columns);
    cols = columns.size();
    rows = transpose(columns, rows.size());
    if (cols == 0) rows.clear();
  }
  if (rows.empty() || cols == 0) return SignedMatrix(rows.size(), cols);
  return SignedMatrix(rows);
}

}  // namespace tuvote
