#include "uplab/hermite/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace uplab::hermite {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("MultiIndex: entries must be nonnegative");
  order_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(entries_[j]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  if (a.order_ != b.order_) return a.order_ <=> b.order_;
  // same degree: larger leading entries come first
  for (int j = 0; j < a.dim(); ++j)
    if (a.entries_[j] != b.entries_[j]) return b.entries_[j] <=> a.entries_[j];
  return std::strong_ordering::equal;
}

namespace {

void compositions(int remaining, std::size_t pos, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions(remaining - v, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int n, int max_degree) {
  if (n < 1 || max_degree < 0) throw std::invalid_argument("enumerate_multi_indices: need n >= 1, D >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  for (int d = 0; d <= max_degree; ++d) compositions(d, 0, cur, out);
  return out;
}

}  // namespace uplab::hermite
