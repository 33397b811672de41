#ifndef GLTD_WEIL_REPS_HPP
#define GLTD_WEIL_REPS_HPP

// Tempered finite-dimensional semisimple representations of the Weil groups
// W_C = C^x and W_R = C^x u jC^x, stored as multisets of irreducible
// summands. Only parameter data is kept; no matrices are realized.

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "gltd/rational.hpp"
#include "gltd/sign.hpp"

namespace gltd {

enum class Side : std::uint8_t { Complex, Real };

/// z -> (z/|z|)^ell |z|^{it}, a unitary character of W_C.
struct ComplexCharacter {
  std::int64_t ell = 0;
  Rational t;

  bool operator==(const ComplexCharacter&) const = default;
  std::strong_ordering operator<=>(const ComplexCharacter&) const = default;
};

/// A 1-dim parameter of W_R: unitary on C^x, j -> (-1)^eps.
struct RealCharacter {
  Sign eps = Sign::Id;
  Rational t;

  bool operator==(const RealCharacter&) const = default;
  std::strong_ordering operator<=>(const RealCharacter&) const = default;
};

/// The 2-dim parameter of W_R induced from chi_{ell,t}.
///
/// Inside a canonical LParameter ell >= 1. Raw input may carry any integer:
/// ell < 0 is identified with -ell, and ell = 0 is the reducible sum of the
/// two sign twists (see canonical_form).
struct RealDiscreteSummand {
  std::int64_t ell = 1;
  Rational t;

  bool operator==(const RealDiscreteSummand&) const = default;
  std::strong_ordering operator<=>(const RealDiscreteSummand&) const = default;
};

/// Alternative order fixes the canonical total order: 1-dim before 2-dim.
using Summand = std::variant<RealCharacter, RealDiscreteSummand, ComplexCharacter>;

Side side_of(const Summand& s) noexcept;
int dim_of(const Summand& s) noexcept;

/// A tempered L-parameter: a finite multiset of summands, all on one side.
class LParameter {
public:
  /// Throws Error(SideMismatch) if a summand does not live on `side`.
  LParameter(Side side, std::vector<Summand> summands);

  static LParameter complex(const std::vector<ComplexCharacter>& chars);
  static LParameter real(const std::vector<RealCharacter>& chars,
                         const std::vector<RealDiscreteSummand>& discrete = {});

  Side side() const noexcept { return side_; }
  const std::vector<Summand>& summands() const noexcept { return summands_; }
  int dim() const noexcept;

  /// Sorted by the canonical order with no raw 2-dim labels (ell <= 0).
  bool is_canonical() const noexcept;

  /// Literal equality of the stored summand lists; use equivalent() for
  /// isomorphism.
  bool operator==(const LParameter&) const = default;

private:
  Side side_;
  std::vector<Summand> summands_;
};

/// Concatenation of summand lists. Throws Error(SideMismatch).
LParameter direct_sum(const LParameter& a, const LParameter& b);

ComplexCharacter galois_conjugate(const ComplexCharacter& chi) noexcept;

LParameter canonical_form(const LParameter& p);

/// Isomorphism of parameters. Throws Error(SideMismatch).
bool equivalent(const LParameter& a, const LParameter& b);

/// Irreducible constituents with multiplicity, in canonical order.
std::vector<Summand> decompose(const LParameter& p);

bool is_irreducible(const LParameter& p);

/// Res^{W_R}_{W_C}. The unramified parameter of a 1-dim summand is doubled
/// (it factors through the norm z -> z zbar); 2-dim summands keep t.
/// Throws Error(SideMismatch) on a ComplexSide input.
LParameter restrict_to_C(const LParameter& p);

/// Ind_{W_C}^{W_R}. For ell = 0 the result is rho + sgn.rho with
/// restrict_to_C(rho) = chi, so t is halved.
LParameter induce_to_R(const ComplexCharacter& chi);

/// dim Hom(a, b) for semisimple a, b. Throws Error(SideMismatch).
std::int64_t hom_dim(const LParameter& a, const LParameter& b);

} // namespace gltd

#endif // GLTD_WEIL_REPS_HPP
