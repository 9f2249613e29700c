#ifndef NONINC_INDEX_SET_HPP
#define NONINC_INDEX_SET_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "noninc/bits.hpp"
#include "noninc/error.hpp"

namespace noninc {

/// Strictly increasing list of point or line indices.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::uint32_t> sorted) : idx_(std::move(sorted)) {
    for (std::size_t i = 1; i < idx_.size(); ++i)
      if (idx_[i - 1] >= idx_[i])
        throw error(errc::bad_parameters, "index set must be strictly increasing");
  }
  IndexSet(std::initializer_list<std::uint32_t> il) : IndexSet(std::vector<std::uint32_t>(il)) {}

  static IndexSet from_unsorted(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return IndexSet(std::move(v));
  }

  static IndexSet from_bits(std::span<const Word> bits) {
    std::vector<std::uint32_t> v;
    for_each_bit(bits, [&](std::size_t i) { v.push_back(static_cast<std::uint32_t>(i)); });
    return IndexSet(std::move(v));
  }

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  std::uint32_t operator[](std::size_t i) const { return idx_[i]; }
  const std::vector<std::uint32_t>& indices() const { return idx_; }

  bool contains(std::uint32_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

  /// Throws IndexOutOfRange unless every index is below `universe`.
  void check_range(std::size_t universe) const {
    if (!idx_.empty() && idx_.back() >= universe)
      throw error(errc::index_out_of_range,
                  "index " + std::to_string(idx_.back()) + " >= " + std::to_string(universe));
  }

  std::vector<Word> to_bits(std::size_t universe) const {
    check_range(universe);
    std::vector<Word> out(words_for(universe), 0);
    for (auto i : idx_) set_bit(out, i);
    return out;
  }

  IndexSet prefix(std::size_t n) const {
    return IndexSet(std::vector<std::uint32_t>(idx_.begin(), idx_.begin() + static_cast<std::ptrdiff_t>(std::min(n, idx_.size()))));
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::uint32_t> idx_;
};

struct PointTag {};
struct LineTag {};
using PointSet = IndexSet<PointTag>;
using LineSet = IndexSet<LineTag>;

}  // namespace noninc

#endif  // NONINC_INDEX_SET_HPP
