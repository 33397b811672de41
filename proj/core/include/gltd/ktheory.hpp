#ifndef GLTD_KTHEORY_HPP
#define GLTD_KTHEORY_HPP

// K-theory of the reduced C*-algebras of GL(n,R) and GL(n,C), computed from
// the tempered dual: each component R^d/W_sigma contributes Z in degree
// d mod 2 when W_sigma is trivial and nothing when it is a closed cone.
//
// The groups are free abelian of countable rank. They are never
// materialized: a GeneratorSchema decides membership for arbitrary labels,
// and a GradedKGroup holds the finite list of generators under a label
// bound L. Degrees are taken mod 2.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gltd/tempered_dual.hpp"

namespace gltd {

enum class Field : std::uint8_t { Real, Complex };

constexpr const char* to_string(Field f) noexcept { return f == Field::Real ? "R" : "C"; }

struct KRanks {
  int k0 = 0;
  int k1 = 0;

  int operator[](int degree) const noexcept { return degree == 0 ? k0 : k1; }
  bool operator==(const KRanks&) const = default;
};

/// Ranks of K^0, K^1 of a single component.
KRanks k_ranks_component(const Component& c);

/// Closed form of the generator families of K_*(C*_r GL(n, F)).
///
///   R, n = 2q:      degree q:   q distinct discrete labels, r = 0
///                   degree q+1: q-1 distinct labels with signs {id, sgn}
///   R, n = 2q + 1:  degree q+1: q distinct labels with one sign
///   C:              degree n:   n distinct integers
class GeneratorSchema {
public:
  /// Throws Error(InvalidN) if n < 1.
  GeneratorSchema(Field field, int n);

  Field field() const noexcept { return field_; }
  int n() const noexcept { return n_; }

  /// Degree in which `c` is a generator; nullopt when `c` is a cone or
  /// belongs to another group.
  std::optional<int> degree_of(const Component& c) const;

  /// Number of generators of `degree` whose labels are bounded by L.
  std::int64_t count(int degree, int max_label) const;

  /// Those generators, built directly from the closed form, sorted.
  std::vector<Component> generators(int degree, int max_label) const;

  /// Human-readable description of the family in `degree`.
  std::string describe(int degree) const;

  bool operator==(const GeneratorSchema&) const = default;

private:
  Field field_;
  int n_;
};

/// K_* of GL(n, F) truncated at label bound L.
class GradedKGroup {
public:
  /// Throws Error(InvalidN) or Error(InvalidTruncation) if L < 1.
  GradedKGroup(Field field, int n, int max_label);

  const GeneratorSchema& schema() const noexcept { return schema_; }
  Field field() const noexcept { return schema_.field(); }
  int n() const noexcept { return schema_.n(); }
  int max_label() const noexcept { return max_label_; }

  const std::vector<Component>& generators(int degree) const;
  std::int64_t rank(int degree) const { return static_cast<std::int64_t>(generators(degree).size()); }

private:
  GeneratorSchema schema_;
  int max_label_;
  std::vector<Component> generators_[2];
};

GradedKGroup k_group(Field field, int n, int max_label);

/// Finitely supported integer combination of generators of one degree.
class KClass {
public:
  /// Throws Error(DegreeMismatch) unless degree is 0 or 1.
  explicit KClass(int degree);

  static KClass generator(const Component& c, int degree, std::int64_t coeff = 1);

  int degree() const noexcept { return degree_; }
  const std::map<Component, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * c; zero coefficients are dropped.
  void add(const Component& c, std::int64_t coeff);

  KClass& operator+=(const KClass& other);
  KClass& operator*=(std::int64_t k);

  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a += b * -1; }
  friend KClass operator*(KClass a, std::int64_t k) { return a *= k; }
  friend KClass operator*(std::int64_t k, KClass a) { return a *= k; }

  bool operator==(const KClass&) const = default;

private:
  int degree_;
  std::map<Component, std::int64_t> terms_;
};

/// Throws Error(UnknownGenerator) if a term is not a generator of `schema`,
/// Error(DegreeMismatch) if it is one of the other degree.
void validate(const KClass& x, const GeneratorSchema& schema);

/// Degree-preserving homomorphism given on generators. The rule is
/// label-wise, so it applies beyond any truncation.
class KHomomorphism {
public:
  using Rule = std::function<KClass(const Component& generator, int degree)>;

  KHomomorphism(std::string name, GeneratorSchema domain, GeneratorSchema codomain,
                Rule rule);

  const std::string& name() const noexcept { return name_; }
  const GeneratorSchema& domain() const noexcept { return domain_; }
  const GeneratorSchema& codomain() const noexcept { return codomain_; }

  /// Image of a single domain generator. Throws like validate().
  KClass image(const Component& generator, int degree) const;

private:
  std::string name_;
  GeneratorSchema domain_;
  GeneratorSchema codomain_;
  Rule rule_;
};

/// K_*(BC): K_*(GL(n,C)) -> K_*(GL(n,R)). For n = 1 in degree 1 the
/// generator {0} goes to {id} + {sgn} and every other generator to zero;
/// for n > 1 the map vanishes.
KHomomorphism k_bc_hom(int n);

/// K_*(AI): K_*(GL(2n,R)) -> K_*(GL(n,C)). In degree n the generator
/// [D_l1 x ... x D_ln] goes to the complex generator with the same positive
/// labels; the other family goes to zero.
KHomomorphism k_ai_hom(int n);

/// Additive extension of h. Throws Error(DegreeMismatch) or
/// Error(UnknownGenerator) if x is not a class of h.domain().
KClass apply_hom(const KHomomorphism& h, const KClass& x);

// -- Representation rings ----------------------------------------------------

enum class RepRing : std::uint8_t { U1, Z2 };

/// Element of R(U(1)) (labels: winding numbers) or R(Z/2Z) (labels: 0 for the
/// trivial character, 1 for eps).
class RepRingElement {
public:
  explicit RepRingElement(RepRing ring) : ring_(ring) {}

  RepRing ring() const noexcept { return ring_; }
  const std::map<std::int64_t, std::int64_t>& coeffs() const noexcept { return coeffs_; }

  /// Throws Error(RingMismatch) for a label outside {0, 1} on R(Z/2Z).
  void add(std::int64_t label, std::int64_t coeff);

  bool operator==(const RepRingElement&) const = default;

private:
  RepRing ring_;
  std::map<std::int64_t, std::int64_t> coeffs_;
};

/// R(U(1)) -> R(Z/2Z): trivial character -> 1 + eps, the rest -> 0.
/// Throws Error(RingMismatch) unless x lives in R(U(1)).
RepRingElement repring_bc(const RepRingElement& x);

} // namespace gltd

#endif // GLTD_KTHEORY_HPP
