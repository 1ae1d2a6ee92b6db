#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "tuvote/structure.hpp"

namespace tuvote {
namespace {

// Fixed-width bitset sized at runtime.
class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bits minus(const Bits& o) const {
    Bits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~o.words_[k];
    return out;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Places column groups left to right. A row is "open" while its block has
// started and the last placed group belongs to it; once a group outside the
// row follows, the row is closed. Both facts depend only on the placed set and
// the last group, so failed states are memoised on that pair.
class C1pSearch {
 public:
  C1pSearch(std::size_t groups, std::vector<Bits> rows) : groups_(groups), rows_(std::move(rows)) {
    full_ = Bits(groups_);
    for (std::size_t g = 0; g < groups_; ++g) full_.set(g);
  }

  std::optional<std::vector<std::size_t>> run() {
    order_.clear();
    if (extend(Bits(groups_), groups_)) return order_;
    return std::nullopt;
  }

 private:
  struct StateHash {
    std::size_t operator()(const std::pair<Bits, std::size_t>& s) const {
      return s.first.hash() * 31 + s.second;
    }
  };

  bool extend(const Bits& placed, std::size_t last) {
    if (placed == full_) return true;

    Bits candidates = full_.minus(placed);
    for (const Bits& row : rows_) {
      if (!row.intersects(placed)) continue;
      if (last < groups_ && row.test(last)) {
        Bits remaining = row.minus(placed);
        if (!remaining.none()) candidates &= remaining;
      } else if (!row.minus(placed).none()) {
        return false;  // closed with members still unplaced
      }
    }

    for (std::size_t g = 0; g < groups_; ++g) {
      if (!candidates.test(g)) continue;
      Bits next = placed;
      next.set(g);
      auto key = std::make_pair(next, g);
      if (failed_.count(key)) continue;
      order_.push_back(g);
      if (extend(next, g)) return true;
      order_.pop_back();
      failed_.insert(std::move(key));
    }
    return false;
  }

  std::size_t groups_;
  std::vector<Bits> rows_;
  Bits full_;
  std::vector<std::size_t> order_;
  std::unordered_set<std::pair<Bits, std::size_t>, StateHash> failed_;
};

}  // namespace

std::optional<std::vector<std::size_t>> has_c1p(const BinaryMatrix& m) {
  const std::size_t cols = m.cols();

  // Rows with fewer than two ones or with all ones never constrain the order.
  std::vector<std::size_t> active_rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < cols; ++c) ones += m(r, c);
    if (ones >= 2 && ones < cols) active_rows.push_back(r);
  }

  // Identical columns can always sit next to each other, so search over
  // groups of twins. All-zero columns go last.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<std::uint8_t>> signatures;
  std::vector<std::size_t> zero_columns;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::uint8_t> sig;
    sig.reserve(active_rows.size());
    for (auto r : active_rows) sig.push_back(m(r, c));
    if (std::all_of(sig.begin(), sig.end(), [](std::uint8_t v) { return v == 0; })) {
      zero_columns.push_back(c);
      continue;
    }
    auto it = std::find(signatures.begin(), signatures.end(), sig);
    if (it == signatures.end()) {
      signatures.push_back(std::move(sig));
      groups.push_back({c});
    } else {
      groups[static_cast<std::size_t>(it - signatures.begin())].push_back(c);
    }
  }

  std::vector<Bits> rows;
  for (std::size_t k = 0; k < active_rows.size(); ++k) {
    Bits row(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (signatures[g][k]) row.set(g);
    }
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(std::move(row));
  }

  auto group_order = C1pSearch(groups.size(), std::move(rows)).run();
  if (!group_order) return std::nullopt;

  std::vector<std::size_t> permutation;
  permutation.reserve(cols);
  for (auto g : *group_order) permutation.insert(permutation.end(), groups[g].begin(), groups[g].end());
  permutation.insert(permutation.end(), zero_columns.begin(), zero_columns.end());

  if (!m.has_strong_c1p(permutation)) {
    throw std::logic_error("consecutive-ones search produced an invalid column order");
  }
  return permutation;
}

}  // namespace tuvote
