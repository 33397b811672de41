#ifndef GLTD_TEMPERED_DUAL_HPP
#define GLTD_TEMPERED_DUAL_HPP

// Harish-Chandra parameter spaces of the tempered duals of GL(n,R) and
// GL(n,C). A connected component is X(M)/W_sigma(M) for a Levi class M and a
// discrete-series datum sigma; components are keyed by the W(M)-orbit of
// sigma, which is a multiset of labels.

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "gltd/rational.hpp"
#include "gltd/sign.hpp"

namespace gltd {

/// Levi subgroup GL(2)^q x GL(1)^r of GL(2q + r, R).
struct LeviClass {
  int q = 0;
  int r = 0;

  int n() const noexcept { return 2 * q + r; }

  bool operator==(const LeviClass&) const = default;
  auto operator<=>(const LeviClass&) const = default;
};

/// All (q, r) with 2q + r = n, q descending. Throws Error(InvalidN) if n < 1.
std::vector<LeviClass> levi_classes(int n);

/// Component of the tempered dual of GL(n,R): q discrete-series labels
/// (ell >= 1, stored ascending) and r sign characters (stored as counts).
class RealComponent {
public:
  /// Throws Error(InvalidComponent) for a label < 1, negative counts or an
  /// empty datum.
  RealComponent(std::vector<std::int64_t> discrete, int id_count, int sgn_count);

  const std::vector<std::int64_t>& discrete() const noexcept { return discrete_; }
  int id_count() const noexcept { return id_count_; }
  int sgn_count() const noexcept { return sgn_count_; }

  int q() const noexcept { return static_cast<int>(discrete_.size()); }
  int r() const noexcept { return id_count_ + sgn_count_; }
  int n() const noexcept { return 2 * q() + r(); }
  LeviClass levi() const noexcept { return {q(), r()}; }

  /// Rank of X(M), i.e. q + r.
  int dimension() const noexcept { return q() + r(); }

  bool operator==(const RealComponent&) const = default;
  /// Discrete labels first, then r, then sgn count (id before sgn).
  std::strong_ordering operator<=>(const RealComponent& o) const;

private:
  std::vector<std::int64_t> discrete_;
  int id_count_ = 0;
  int sgn_count_ = 0;
};

/// Component of the tempered dual of GL(n,C): a W = S_n orbit of n
/// characters of the compact torus, stored as ascending labels.
class ComplexComponent {
public:
  /// Throws Error(InvalidComponent) if `labels` is empty.
  explicit ComplexComponent(std::vector<std::int64_t> labels);

  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }
  int n() const noexcept { return static_cast<int>(labels_.size()); }
  int dimension() const noexcept { return n(); }

  bool operator==(const ComplexComponent&) const = default;
  auto operator<=>(const ComplexComponent&) const = default;

private:
  std::vector<std::int64_t> labels_;
};

using Component = std::variant<RealComponent, ComplexComponent>;

int dimension(const Component& c) noexcept;
int rank_n(const Component& c) noexcept;

/// W_sigma(M) as a product of symmetric groups S_m (m >= 2 each).
struct IsotropyDescriptor {
  std::vector<int> factors;  // ascending

  bool trivial() const noexcept { return factors.empty(); }
  std::int64_t order() const noexcept;

  bool operator==(const IsotropyDescriptor&) const = default;
};

IsotropyDescriptor isotropy(const RealComponent& c);
IsotropyDescriptor isotropy(const ComplexComponent& c);
IsotropyDescriptor isotropy(const Component& c);

/// X(M)/W_sigma(M) is a closed cone exactly when the isotropy is nontrivial.
bool is_cone(const RealComponent& c);
bool is_cone(const ComplexComponent& c);
bool is_cone(const Component& c);

/// Every component of GL(n,R) with discrete labels in [1, L], one per
/// W(M)-orbit. Ordered by Levi class (q descending), then discrete labels
/// lexicographically, then sgn count ascending.
/// Throws Error(InvalidN) or Error(InvalidTruncation).
std::vector<RealComponent> enumerate_components_real(int n, int max_label);

/// Every multiset of n labels from [-L, L], lexicographic.
/// Throws Error(InvalidN) or Error(InvalidTruncation) if L < 0.
std::vector<ComplexComponent> enumerate_components_complex(int n, int max_label);

// -- Points ------------------------------------------------------------------

struct DiscreteSlot {
  std::int64_t ell = 1;

  bool operator==(const DiscreteSlot&) const = default;
  auto operator<=>(const DiscreteSlot&) const = default;
};

/// Discrete-series slots sort before sign slots.
using RealSlot = std::variant<DiscreteSlot, Sign>;

struct RealCoord {
  RealSlot slot;
  Rational t;

  bool operator==(const RealCoord&) const = default;
  std::strong_ordering operator<=>(const RealCoord&) const = default;
};

struct ComplexCoord {
  std::int64_t ell = 0;
  Rational t;

  bool operator==(const ComplexCoord&) const = default;
  std::strong_ordering operator<=>(const ComplexCoord&) const = default;
};

/// A point of the GL(n,R) tempered dual in normalized form: coordinates are
/// sorted by slot, and by t among equal slots. This is the unique
/// representative of its W_sigma-orbit.
class RealPoint {
public:
  const RealComponent& component() const noexcept { return component_; }
  const std::vector<RealCoord>& coords() const noexcept { return coords_; }

  bool operator==(const RealPoint&) const = default;

private:
  RealPoint(RealComponent c, std::vector<RealCoord> coords)
      : component_(std::move(c)), coords_(std::move(coords)) {}

  friend RealPoint canonicalize_point(const RealComponent&, std::vector<RealCoord>);

  RealComponent component_;
  std::vector<RealCoord> coords_;
};

class ComplexPoint {
public:
  const ComplexComponent& component() const noexcept { return component_; }
  const std::vector<ComplexCoord>& coords() const noexcept { return coords_; }

  bool operator==(const ComplexPoint&) const = default;

private:
  ComplexPoint(ComplexComponent c, std::vector<ComplexCoord> coords)
      : component_(std::move(c)), coords_(std::move(coords)) {}

  friend ComplexPoint canonicalize_point(const ComplexComponent&,
                                         std::vector<ComplexCoord>);

  ComplexComponent component_;
  std::vector<ComplexCoord> coords_;
};

using TemperedPoint = std::variant<RealPoint, ComplexPoint>;

/// Normalizes raw coordinates. Throws Error(LabelMismatch) if the slot
/// labels are not exactly the component's label multiset.
RealPoint canonicalize_point(const RealComponent& c, std::vector<RealCoord> raw);
ComplexPoint canonicalize_point(const ComplexComponent& c,
                                std::vector<ComplexCoord> raw);

/// Idempotent re-normalization of an existing point.
RealPoint canonicalize_point(const RealPoint& p);
ComplexPoint canonicalize_point(const ComplexPoint& p);

/// Builds the point whose component is read off the slot labels.
/// Throws Error(InvalidComponent) for an empty or ill-labelled coordinate list.
RealPoint make_real_point(std::vector<RealCoord> coords);
ComplexPoint make_complex_point(std::vector<ComplexCoord> coords);

const RealComponent& component_of(const RealPoint& p) noexcept;
const ComplexComponent& component_of(const ComplexPoint& p) noexcept;
Component component_of(const TemperedPoint& p);

} // namespace gltd

#endif // GLTD_TEMPERED_DUAL_HPP
