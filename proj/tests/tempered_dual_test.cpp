#include <gtest/gtest.h>

#include <map>

#include "gltd/errors.hpp"
#include "gltd/tempered_dual.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gltd {
namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gltd::Error thrown";
  return ErrorCode::ParseError;
}

TEST(LeviClasses, Examples) {
  EXPECT_EQ(levi_classes(4), (std::vector<LeviClass>{{2, 0}, {1, 2}, {0, 4}}));
  EXPECT_EQ(levi_classes(1), (std::vector<LeviClass>{{0, 1}}));
  EXPECT_EQ(levi_classes(5), (std::vector<LeviClass>{{2, 1}, {1, 3}, {0, 5}}));
  EXPECT_EQ(code_of([] { levi_classes(0); }), ErrorCode::InvalidN);
}

TEST(LeviClasses, CoverEveryPartitionIntoOnesAndTwos) {
  for (int n = 1; n <= 12; ++n) {
    const auto classes = levi_classes(n);
    EXPECT_EQ(classes.size(), static_cast<std::size_t>(n / 2 + 1));
    for (const auto& l : classes) EXPECT_EQ(l.n(), n);
  }
}

TEST(RealComponent, Validation) {
  EXPECT_EQ(code_of([] { RealComponent({0}, 0, 0); }), ErrorCode::InvalidComponent);
  EXPECT_EQ(code_of([] { RealComponent({}, 0, 0); }), ErrorCode::InvalidComponent);
  EXPECT_EQ(code_of([] { RealComponent({1}, -1, 0); }), ErrorCode::InvalidComponent);
  const RealComponent c({5, 2, 2}, 1, 2);
  EXPECT_EQ(c.discrete(), (std::vector<std::int64_t>{2, 2, 5}));
  EXPECT_EQ(c.n(), 9);
  EXPECT_EQ(c.dimension(), 6);
  EXPECT_EQ(c.levi(), (LeviClass{3, 3}));
}

TEST(Isotropy, Examples) {
  EXPECT_EQ(isotropy(RealComponent({3, 3}, 0, 0)).factors, std::vector<int>{2});
  EXPECT_EQ(oracle::stabilizer_order(std::vector<std::int64_t>{3, 3}), 2);
  EXPECT_TRUE(isotropy(RealComponent({5}, 1, 1)).trivial());
  EXPECT_EQ(isotropy(ComplexComponent({1, 1, 2})).factors, std::vector<int>{2});
  EXPECT_EQ(isotropy(RealComponent({1, 1, 1, 4, 4}, 2, 3)).factors, (std::vector<int>{2, 2, 3, 3}));
  EXPECT_EQ(isotropy(RealComponent({1, 1, 1, 4, 4}, 2, 3)).order(), 2 * 2 * 6 * 6);
}

TEST(Isotropy, OrderMatchesBruteForceStabilizer) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_components_real(n, 3)) {
      std::vector<int> signs(c.id_count(), 0);
      signs.insert(signs.end(), c.sgn_count(), 1);
      EXPECT_EQ(isotropy(c).order(), oracle::stabilizer_order_real(c.discrete(), signs));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : enumerate_components_complex(n, 2)) {
      EXPECT_EQ(isotropy(c).order(), oracle::stabilizer_order(c.labels()));
    }
  }
}

TEST(IsCone, Examples) {
  EXPECT_TRUE(is_cone(ComplexComponent({0, 0})));
  EXPECT_TRUE(is_cone(RealComponent({}, 2, 1)));
  EXPECT_FALSE(is_cone(RealComponent({7}, 0, 0)));
}

TEST(IsCone, EveryQZeroComponentIsAConeForNAtLeastThree) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& c : enumerate_components_real(n, 2)) {
      if (c.q() == 0) EXPECT_TRUE(is_cone(c));
      EXPECT_EQ(is_cone(c), !isotropy(c).trivial());
    }
  }
}

TEST(EnumerateReal, Examples) {
  const auto one = enumerate_components_real(1, 4);
  EXPECT_EQ(one, (std::vector<RealComponent>{RealComponent({}, 1, 0), RealComponent({}, 0, 1)}));

  const auto two = enumerate_components_real(2, 2);
  EXPECT_EQ(two, (std::vector<RealComponent>{RealComponent({1}, 0, 0), RealComponent({2}, 0, 0),
                                             RealComponent({}, 2, 0), RealComponent({}, 1, 1),
                                             RealComponent({}, 0, 2)}));
  EXPECT_EQ(enumerate_components_real(3, 1).size(), 6u);
  EXPECT_EQ(code_of([] { enumerate_components_real(2, 0); }), ErrorCode::InvalidTruncation);
  EXPECT_EQ(code_of([] { enumerate_components_real(0, 2); }), ErrorCode::InvalidN);
}

TEST(EnumerateReal, MatchesBruteForceOrbits) {
  for (int n = 1; n <= 6; ++n) {
    for (int L = 1; L <= 4; ++L) {
      std::set<RealComponent> expected;
      for (const auto& d : oracle::real_orbits(n, L)) expected.insert(oracle::to_component(d));
      const auto got = enumerate_components_real(n, L);
      EXPECT_EQ(std::set<RealComponent>(got.begin(), got.end()), expected);
      EXPECT_EQ(got.size(), expected.size()) << "duplicates for n=" << n << " L=" << L;
    }
  }
}

TEST(EnumerateReal, CountMonotoneInL) {
  for (int n = 1; n <= 6; ++n) {
    std::size_t prev = 0;
    for (int L = 1; L <= 6; ++L) {
      const auto count = enumerate_components_real(n, L).size();
      EXPECT_GE(count, prev);
      prev = count;
    }
  }
}

TEST(EnumerateReal, NonConeCountsFollowClosedForm) {
  for (int n = 1; n <= 7; ++n) {
    for (int L = 1; L <= 6; ++L) {
      std::int64_t non_cone = 0;
      for (const auto& c : enumerate_components_real(n, L)) non_cone += !is_cone(c);
      const int q = n / 2;
      const auto expected = n % 2 == 0 ? oracle::binomial(L, q) + oracle::binomial(L, q - 1)
                                       : 2 * oracle::binomial(L, q);
      EXPECT_EQ(non_cone, expected) << "n=" << n << " L=" << L;
    }
  }
}

TEST(EnumerateComplex, Examples) {
  EXPECT_EQ(enumerate_components_complex(1, 1),
            (std::vector<ComplexComponent>{ComplexComponent({-1}), ComplexComponent({0}),
                                           ComplexComponent({1})}));
  EXPECT_EQ(enumerate_components_complex(2, 1).size(), 6u);
  EXPECT_EQ(enumerate_components_complex(1, 0), std::vector<ComplexComponent>{ComplexComponent({0})});
  EXPECT_EQ(code_of([] { enumerate_components_complex(1, -1); }), ErrorCode::InvalidTruncation);
}

TEST(EnumerateComplex, MatchesBruteForceOrbits) {
  for (int n = 1; n <= 4; ++n) {
    for (int L = 0; L <= 3; ++L) {
      const auto got = enumerate_components_complex(n, L);
      EXPECT_EQ(static_cast<std::int64_t>(got.size()), oracle::binomial(2 * L + 1 + n - 1, n));
      std::set<std::vector<std::int64_t>> labels;
      for (const auto& c : got) labels.insert(c.labels());
      EXPECT_EQ(labels, oracle::complex_orbits(n, L));
    }
  }
}

TEST(CanonicalizePoint, Examples) {
  const RealComponent mixed({}, 1, 1);
  const auto a = canonicalize_point(mixed, {{Sign::Sgn, R(3)}, {Sign::Id, R(1)}});
  EXPECT_EQ(a.coords(), (std::vector<RealCoord>{{Sign::Id, R(1)}, {Sign::Sgn, R(3)}}));

  const RealComponent ids({}, 2, 0);
  const auto b = canonicalize_point(ids, {{Sign::Id, R(5)}, {Sign::Id, R(2)}});
  EXPECT_EQ(b.coords(), (std::vector<RealCoord>{{Sign::Id, R(2)}, {Sign::Id, R(5)}}));

  const ComplexComponent cc({2, 2, -1});
  const auto c = canonicalize_point(cc, {{2, R(9)}, {-1, R(0)}, {2, R(-4)}});
  EXPECT_EQ(c.coords(), (std::vector<ComplexCoord>{{-1, R(0)}, {2, R(-4)}, {2, R(9)}}));
  // Both orderings of the repeated label's coordinates give the same point.
  EXPECT_EQ(canonicalize_point(cc, {{2, R(-4)}, {-1, R(0)}, {2, R(9)}}), c);
}

TEST(CanonicalizePoint, DiscreteSlotsPrecedeSigns) {
  const auto p = make_real_point({{Sign::Id, R(5)}, {DiscreteSlot{2}, R(0)}});
  EXPECT_EQ(p.coords(), (std::vector<RealCoord>{{DiscreteSlot{2}, R(0)}, {Sign::Id, R(5)}}));
  EXPECT_EQ(p.component(), RealComponent({2}, 1, 0));
}

TEST(CanonicalizePoint, LabelMismatch) {
  EXPECT_EQ(code_of([] { canonicalize_point(RealComponent({3}, 0, 0), {{DiscreteSlot{4}, R(0)}}); }),
            ErrorCode::LabelMismatch);
  EXPECT_EQ(code_of([] { canonicalize_point(RealComponent({}, 1, 1), {{Sign::Id, R(0)}, {Sign::Id, R(1)}}); }),
            ErrorCode::LabelMismatch);
  EXPECT_EQ(code_of([] { canonicalize_point(ComplexComponent({1, 2}), {{1, R(0)}}); }),
            ErrorCode::LabelMismatch);
}

// Permutes t-values among slots that carry the same label.
template <typename Coord, typename KeyFn>
std::vector<Coord> permute_within_labels(std::vector<Coord> coords, gen::Rng& rng, KeyFn key) {
  std::map<decltype(key(coords[0])), std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < coords.size(); ++i) groups[key(coords[i])].push_back(i);
  for (auto& [k, idx] : groups) {
    std::vector<Rational> ts;
    for (auto i : idx) ts.push_back(coords[i].t);
    std::shuffle(ts.begin(), ts.end(), rng);
    for (std::size_t j = 0; j < idx.size(); ++j) coords[idx[j]].t = ts[j];
  }
  return coords;
}

TEST(CanonicalizePoint, IdempotentAndOrbitInvariant) {
  gen::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto p = gen::real_point(rng);
    EXPECT_EQ(canonicalize_point(p), p);
    const auto moved = permute_within_labels(gen::shuffled(p.coords(), rng), rng,
                                             [](const RealCoord& c) { return c.slot; });
    EXPECT_EQ(canonicalize_point(p.component(), moved), p);

    const auto z = gen::complex_point(rng);
    EXPECT_EQ(canonicalize_point(z), z);
    const auto zmoved = permute_within_labels(gen::shuffled(z.coords(), rng), rng,
                                              [](const ComplexCoord& c) { return c.ell; });
    EXPECT_EQ(canonicalize_point(z.component(), zmoved), z);
  }
}

TEST(ComponentOf, Examples) {
  EXPECT_EQ(component_of(make_real_point({{DiscreteSlot{3}, R(1, 4)}})), RealComponent({3}, 0, 0));
  EXPECT_EQ(component_of(make_real_point({{Sign::Sgn, R(0)}})), RealComponent({}, 0, 1));
  const TemperedPoint z = make_complex_point({{0, R(1)}, {0, R(2)}});
  EXPECT_EQ(component_of(z), Component(ComplexComponent({0, 0})));
}

} // namespace
} // namespace gltd
