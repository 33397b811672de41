#ifndef GLTD_TESTS_ORACLES_HPP
#define GLTD_TESTS_ORACLES_HPP

// Brute-force oracles. They work on raw label tuples and explicit
// permutations and share no code path with the library's multiset
// enumeration, isotropy or closed-form generator construction.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "gltd/ktheory.hpp"
#include "gltd/weil_reps.hpp"

namespace gltd::oracle {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Pascal's triangle, independent of the library's multiplicative formula.
  std::vector<std::vector<std::int64_t>> c(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::int64_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::int64_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

/// Order of the stabilizer of `tuple` in the full symmetric group on its
/// slots, by enumerating every permutation.
template <typename T>
std::int64_t stabilizer_order(const std::vector<T>& tuple) {
  std::vector<int> perm(tuple.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool fixes = true;
    for (std::size_t i = 0; i < perm.size() && fixes; ++i) fixes = tuple[perm[i]] == tuple[i];
    if (fixes) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Stabilizer of a real datum in W(M) = S_q x S_r.
inline std::int64_t stabilizer_order_real(const std::vector<std::int64_t>& discrete,
                                          const std::vector<int>& signs) {
  return stabilizer_order(discrete) * stabilizer_order(signs);
}

// Real datum: (discrete labels, signs as 0/1), both sorted.
using RealDatum = std::pair<std::vector<std::int64_t>, std::vector<int>>;

/// Every W(M)-orbit of data for GL(n,R) with labels in [1, L], found by
/// enumerating all raw tuples and sorting each.
inline std::set<RealDatum> real_orbits(int n, int L) {
  std::set<RealDatum> out;
  for (int q = 0; 2 * q <= n; ++q) {
    const int r = n - 2 * q;
    std::int64_t raw_count = 1;
    for (int i = 0; i < q; ++i) raw_count *= L;
    for (std::int64_t code = 0; code < raw_count; ++code) {
      std::vector<std::int64_t> discrete;
      std::int64_t c = code;
      for (int i = 0; i < q; ++i, c /= L) discrete.push_back(1 + c % L);
      for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> signs;
        for (int i = 0; i < r; ++i) signs.push_back((mask >> i) & 1);
        auto d = discrete;
        std::sort(d.begin(), d.end());
        std::sort(signs.begin(), signs.end());
        out.emplace(d, signs);
      }
    }
  }
  return out;
}

inline std::set<std::vector<std::int64_t>> complex_orbits(int n, int L) {
  std::set<std::vector<std::int64_t>> out;
  const int width = 2 * L + 1;
  std::int64_t raw_count = 1;
  for (int i = 0; i < n; ++i) raw_count *= width;
  for (std::int64_t code = 0; code < raw_count; ++code) {
    std::vector<std::int64_t> labels;
    std::int64_t c = code;
    for (int i = 0; i < n; ++i, c /= width) labels.push_back(-L + c % width);
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

inline RealComponent to_component(const RealDatum& d) {
  const auto sgn = std::count(d.second.begin(), d.second.end(), 1);
  return RealComponent(d.first, static_cast<int>(d.second.size() - sgn), static_cast<int>(sgn));
}

/// Generators of K_j for GL(n,F) under truncation L: orbits with trivial
/// stabilizer, split by parity of the orbit-space dimension.
inline std::set<Component> k_generators(Field field, int n, int L, int degree) {
  std::set<Component> out;
  if (field == Field::Real) {
    for (const auto& d : real_orbits(n, L)) {
      if (stabilizer_order_real(d.first, d.second) != 1) continue;
      const int dim = static_cast<int>(d.first.size() + d.second.size());
      if (dim % 2 == degree) out.insert(to_component(d));
    }
  } else {
    for (const auto& labels : complex_orbits(n, L)) {
      if (stabilizer_order(labels) != 1) continue;
      if (n % 2 == degree) out.insert(ComplexComponent(labels));
    }
  }
  return out;
}

/// Numerical value of chi_{ell,t}(z) = (z/|z|)^ell |z|^{it}.
inline std::complex<double> evaluate(const ComplexCharacter& chi, std::complex<double> z) {
  const double t = boost::rational_cast<double>(chi.t);
  const double r = std::abs(z);
  return std::pow(z / r, static_cast<double>(chi.ell)) * std::polar(1.0, t * std::log(r));
}

/// Two diagonal representations of W_C are GL(n,C)-conjugate iff some
/// bijection of their characters agrees on a set of sample points. Searches
/// every bijection.
inline bool conjugate_by_search(const std::vector<ComplexCharacter>& a,
                                const std::vector<ComplexCharacter>& b) {
  if (a.size() != b.size()) return false;
  const std::complex<double> samples[] = {{2.0, 1.0}, {-0.3, 1.7}, {0.5, -2.5}, {3.0, 0.1}};
  std::vector<int> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      for (auto z : samples) {
        if (std::abs(evaluate(a[i], z) - evaluate(b[perm[i]], z)) > 1e-9) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace gltd::oracle

#endif // GLTD_TESTS_ORACLES_HPP
