#ifndef GLTD_DETAIL_COMBINATORICS_HPP
#define GLTD_DETAIL_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace gltd::detail {

// Visits every nondecreasing sequence of length k with entries in [lo, hi],
// in lexicographic order. With `strict`, sequences are strictly increasing
// (k-subsets).
template <typename Fn>
void for_each_sorted_tuple(int k, std::int64_t lo, std::int64_t hi, bool strict,
                           Fn&& fn) {
  std::vector<std::int64_t> cur;
  cur.reserve(k);
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      fn(static_cast<const std::vector<std::int64_t>&>(cur));
      return;
    }
    for (std::int64_t v = from; v <= hi; ++v) {
      cur.push_back(v);
      self(self, strict ? v + 1 : v);
      cur.pop_back();
    }
  };
  rec(rec, lo);
}

} // namespace gltd::detail

#endif // GLTD_DETAIL_COMBINATORICS_HPP
