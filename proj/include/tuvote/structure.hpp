#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tuvote/model.hpp"

namespace tuvote {

// Row-major 0/1 matrix with row and column labels.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  BinaryMatrix(std::vector<std::vector<std::uint8_t>> rows, std::vector<std::string> row_labels = {},
               std::vector<std::string> col_labels = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool value) { entries_[r * cols_ + c] = value ? 1 : 0; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::vector<std::uint8_t> row(std::size_t r) const;
  void append_row(const std::vector<std::uint8_t>& row, std::string label = {});

  // Rows whose 1-entries are contiguous under the identity column order.
  bool has_strong_c1p() const;
  // Same check after reordering columns: column permutation[j] is shown at j.
  bool has_strong_c1p(const std::vector<std::size_t>& permutation) const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Row-major matrix over {-1, 0, +1}.
class SignedMatrix {
 public:
  SignedMatrix() = default;
  SignedMatrix(std::size_t rows, std::size_t cols);
  // Throws std::invalid_argument for ragged input or entries outside {-1,0,1}.
  explicit SignedMatrix(const std::vector<std::vector<int>>& rows);
  static SignedMatrix from_binary(const BinaryMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int value);

  SignedMatrix transposed() const;
  SignedMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  // [A | B]; row counts must agree.
  SignedMatrix hconcat(const SignedMatrix& other) const;
  SignedMatrix negated() const;
  static SignedMatrix identity(std::size_t n);

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> entries_;
};

// "rows cols" followed by rows of space-separated entries.
SignedMatrix parse_matrix(std::string_view text);
std::string serialize(const SignedMatrix& m);
// Fails if any entry is -1.
BinaryMatrix to_binary(const SignedMatrix& m);

// Bartholdi-Trick matrix: a column per alternative, a row per (voter, t) with
// the incidence vector of the voter's top-initial segment of rank <= t.
BinaryMatrix build_sp_matrix(const Profile& profile);
// A column per voter, a row per ordered pair (a, b), a != b; 1 iff a >_i b.
// Throws std::invalid_argument if any order has ties.
BinaryMatrix build_sc_matrix(const Profile& profile);
// A column per alternative, a row per ballot.
BinaryMatrix build_ballot_matrix(const ApprovalProfile& profile);

// A column order making every row's 1s contiguous, or nullopt when none
// exists. The returned permutation is verified before it is returned.
std::optional<std::vector<std::size_t>> has_c1p(const BinaryMatrix& m);

// Axis certificates are canonicalised to the lexicographically smaller of the
// found axis and its reverse.
std::optional<Axis> is_single_peaked(const Profile& profile);
std::optional<Axis> is_candidate_interval(const ApprovalProfile& profile);
// Requires linear orders (throws std::invalid_argument otherwise).
std::optional<VoterOrdering> is_single_crossing(const Profile& profile);

// Direct certificate checks, independent of the C1P search.
bool axis_certifies_single_peaked(const Profile& profile, const Axis& axis);
bool axis_certifies_candidate_interval(const ApprovalProfile& profile, const Axis& axis);
bool ordering_certifies_single_crossing(const Profile& profile, const VoterOrdering& ordering);

enum class TuVerdict { tu, not_tu, budget_exceeded };

struct TuResult {
  TuVerdict verdict = TuVerdict::tu;
  // For not_tu: a square submatrix of the input with |det| >= 2.
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
  SignedMatrix witness;
  long long witness_det = 0;
  // Row subset (of the tested orientation) with no equitable signing.
  std::vector<std::size_t> violating_subset;
  bool transposed = false;
};

inline constexpr std::size_t kDefaultTuRowBudget = 16;

// Ghouila-Houri test: every row subset must admit a +-1 signing whose column
// sums all lie in {-1, 0, 1}. Runs on the smaller dimension (transposing if
// needed); gives up with budget_exceeded past row_budget.
TuResult is_totally_unimodular(const SignedMatrix& m, std::size_t row_budget = kDefaultTuRowBudget);

// Drops zero rows, columns with at most one non-zero, and duplicate (or
// negated-duplicate) rows and columns until nothing changes. Each step keeps
// total unimodularity in both directions.
SignedMatrix tu_reduce(const SignedMatrix& m);

// Exact determinant via fraction-free elimination.
long long determinant(const SignedMatrix& square);

std::string to_string(TuVerdict verdict);

}  // namespace tuvote
