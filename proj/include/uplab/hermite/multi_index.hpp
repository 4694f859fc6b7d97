#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace uplab::hermite {

// Nonnegative integer index alpha in N^n. Ordered graded-lexicographically:
// by |alpha| first, then lexicographically descending, so (1,0) < (0,1).
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

  int dim() const { return static_cast<int>(entries_.size()); }
  int order() const { return order_; }
  int operator[](int j) const { return entries_[j]; }
  std::span<const int> entries() const { return entries_; }

  std::string to_string() const;  // "(2,0)"

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

// All indices of length n with |alpha| <= max_degree, in graded-lex order.
std::vector<MultiIndex> enumerate_multi_indices(int n, int max_degree);

}  // namespace uplab::hermite
