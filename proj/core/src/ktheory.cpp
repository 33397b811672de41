#include "gltd/ktheory.hpp"

#include <algorithm>
#include <utility>

#include "detail/combinatorics.hpp"
#include "gltd/errors.hpp"

namespace gltd {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void require_degree(int degree) {
  if (degree != 0 && degree != 1) {
    throw Error(ErrorCode::DegreeMismatch,
                "degree must be 0 or 1, got " + std::to_string(degree));
  }
}

int mod2(int x) { return ((x % 2) + 2) % 2; }

std::string label_text(const Component& c) {
  std::string out = "{";
  auto append = [&](const std::string& s) {
    if (out.size() > 1) out += ",";
    out += s;
  };
  if (const auto* rc = std::get_if<RealComponent>(&c)) {
    for (auto ell : rc->discrete()) append("D" + std::to_string(ell));
    for (int i = 0; i < rc->id_count(); ++i) append("id");
    for (int i = 0; i < rc->sgn_count(); ++i) append("sgn");
  } else {
    for (auto ell : std::get<ComplexComponent>(c).labels()) append(std::to_string(ell));
  }
  return out + "}";
}

} // namespace

KRanks k_ranks_component(const Component& c) {
  if (is_cone(c)) return {};
  return dimension(c) % 2 == 0 ? KRanks{1, 0} : KRanks{0, 1};
}

// -- GeneratorSchema ---------------------------------------------------------

GeneratorSchema::GeneratorSchema(Field field, int n) : field_(field), n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidN, "n must be >= 1, got " + std::to_string(n));
  }
}

std::optional<int> GeneratorSchema::degree_of(const Component& c) const {
  const bool real = std::holds_alternative<RealComponent>(c);
  if (real != (field_ == Field::Real) || rank_n(c) != n_ || is_cone(c)) {
    return std::nullopt;
  }
  return dimension(c) % 2;
}

std::int64_t GeneratorSchema::count(int degree, int max_label) const {
  require_degree(degree);
  if (field_ == Field::Complex) {
    return degree == n_ % 2 ? binomial(2 * std::int64_t{max_label} + 1, n_) : 0;
  }
  const int q = n_ / 2;
  if (n_ % 2 == 0) {
    return degree == q % 2 ? binomial(max_label, q) : binomial(max_label, q - 1);
  }
  return degree == mod2(q + 1) ? 2 * binomial(max_label, q) : 0;
}

std::vector<Component> GeneratorSchema::generators(int degree, int max_label) const {
  require_degree(degree);
  std::vector<Component> out;
  auto add_subsets = [&](int k, std::int64_t lo, auto&& make) {
    detail::for_each_sorted_tuple(k, lo, max_label, true,
                                  [&](const std::vector<std::int64_t>& labels) {
                                    make(labels);
                                  });
  };
  if (field_ == Field::Complex) {
    if (degree == n_ % 2) {
      add_subsets(n_, -max_label, [&](const auto& l) { out.emplace_back(ComplexComponent(l)); });
    }
  } else if (const int q = n_ / 2; n_ % 2 == 0) {
    if (degree == q % 2) {
      add_subsets(q, 1, [&](const auto& l) { out.emplace_back(RealComponent(l, 0, 0)); });
    } else {
      add_subsets(q - 1, 1, [&](const auto& l) { out.emplace_back(RealComponent(l, 1, 1)); });
    }
  } else if (degree == mod2(q + 1)) {
    add_subsets(q, 1, [&](const auto& l) {
      out.emplace_back(RealComponent(l, 1, 0));
      out.emplace_back(RealComponent(l, 0, 1));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GeneratorSchema::describe(int degree) const {
  require_degree(degree);
  const auto n = std::to_string(n_);
  if (field_ == Field::Complex) {
    if (degree != n_ % 2) return "0";
    return "free on generic W-orbits: sets of " + n + " distinct integers";
  }
  const int q = n_ / 2;
  const auto qs = std::to_string(q);
  if (n_ % 2 == 0) {
    if (degree == q % 2) {
      return "free on sets of " + qs + " distinct discrete-series labels (r = 0)";
    }
    return "free on sets of " + std::to_string(q - 1) +
           " distinct discrete-series labels with signs {id,sgn} (r = 2)";
  }
  if (degree != mod2(q + 1)) return "0";
  return "free on sets of " + qs +
         " distinct discrete-series labels times a sign in {id,sgn} (r = 1)";
}

// -- GradedKGroup ------------------------------------------------------------

GradedKGroup::GradedKGroup(Field field, int n, int max_label)
    : schema_(field, n), max_label_(max_label) {
  if (max_label < 1) {
    throw Error(ErrorCode::InvalidTruncation,
                "max label must be >= 1, got " + std::to_string(max_label));
  }
  for (int j = 0; j < 2; ++j) generators_[j] = schema_.generators(j, max_label);
}

const std::vector<Component>& GradedKGroup::generators(int degree) const {
  require_degree(degree);
  return generators_[degree];
}

GradedKGroup k_group(Field field, int n, int max_label) {
  return GradedKGroup(field, n, max_label);
}

// -- KClass ------------------------------------------------------------------

KClass::KClass(int degree) : degree_(degree) { require_degree(degree); }

KClass KClass::generator(const Component& c, int degree, std::int64_t coeff) {
  KClass x(degree);
  x.add(c, coeff);
  return x;
}

void KClass::add(const Component& c, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

KClass& KClass::operator+=(const KClass& other) {
  if (other.degree_ != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "adding K-classes of different degrees");
  }
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

KClass& KClass::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, coeff] : terms_) coeff *= k;
  return *this;
}

void validate(const KClass& x, const GeneratorSchema& schema) {
  for (const auto& [c, coeff] : x.terms()) {
    const auto d = schema.degree_of(c);
    if (!d) {
      throw Error(ErrorCode::UnknownGenerator,
                  label_text(c) + " is not a generator of K_*(GL(" +
                      std::to_string(schema.n()) + "," + to_string(schema.field()) + "))");
    }
    if (*d != x.degree()) {
      throw Error(ErrorCode::DegreeMismatch,
                  label_text(c) + " is a generator in degree " + std::to_string(*d) +
                      ", not " + std::to_string(x.degree()));
    }
  }
}

// -- Homomorphisms -----------------------------------------------------------

KHomomorphism::KHomomorphism(std::string name, GeneratorSchema domain,
                             GeneratorSchema codomain, Rule rule)
    : name_(std::move(name)),
      domain_(domain),
      codomain_(codomain),
      rule_(std::move(rule)) {}

KClass KHomomorphism::image(const Component& generator, int degree) const {
  validate(KClass::generator(generator, degree), domain_);
  KClass out = rule_(generator, degree);
  validate(out, codomain_);
  return out;
}

KHomomorphism k_bc_hom(int n) {
  GeneratorSchema domain(Field::Complex, n);
  GeneratorSchema codomain(Field::Real, n);
  return KHomomorphism("bc", domain, codomain, [n](const Component& gen, int degree) {
    KClass out(degree);
    if (n != 1 || degree != 1) return out;
    if (std::get<ComplexComponent>(gen).labels().front() == 0) {
      out.add(RealComponent({}, 1, 0), 1);
      out.add(RealComponent({}, 0, 1), 1);
    }
    return out;
  });
}

KHomomorphism k_ai_hom(int n) {
  GeneratorSchema domain(Field::Real, 2 * n);
  GeneratorSchema codomain(Field::Complex, n);
  return KHomomorphism("ai", domain, codomain, [n](const Component& gen, int degree) {
    KClass out(degree);
    // In degree n mod 2 the domain generators are exactly the r = 0 family.
    if (degree != n % 2) return out;
    const auto& labels = std::get<RealComponent>(gen).discrete();
    out.add(ComplexComponent(labels), 1);
    return out;
  });
}

KClass apply_hom(const KHomomorphism& h, const KClass& x) {
  validate(x, h.domain());
  KClass out(x.degree());
  for (const auto& [gen, coeff] : x.terms()) out += h.image(gen, x.degree()) * coeff;
  return out;
}

// -- Representation rings ----------------------------------------------------

void RepRingElement::add(std::int64_t label, std::int64_t coeff) {
  if (ring_ == RepRing::Z2 && label != 0 && label != 1) {
    throw Error(ErrorCode::RingMismatch,
                "R(Z/2Z) has labels 0 (trivial) and 1 (eps), got " + std::to_string(label));
  }
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

RepRingElement repring_bc(const RepRingElement& x) {
  if (x.ring() != RepRing::U1) {
    throw Error(ErrorCode::RingMismatch, "repring_bc expects an element of R(U(1))");
  }
  RepRingElement out(RepRing::Z2);
  if (auto it = x.coeffs().find(0); it != x.coeffs().end()) {
    out.add(0, it->second);
    out.add(1, it->second);
  }
  return out;
}

} // namespace gltd
