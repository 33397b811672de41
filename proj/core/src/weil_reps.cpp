#include "gltd/weil_reps.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "gltd/errors.hpp"

namespace gltd {

namespace {

const char* side_name(Side s) { return s == Side::Real ? "R" : "C"; }

void require_side(const LParameter& p, Side side, const char* op) {
  if (p.side() != side) {
    throw Error(ErrorCode::SideMismatch,
                std::string(op) + " expects a " + side_name(side) +
                    "-side parameter, got " + side_name(p.side()));
  }
}

void require_same_side(const LParameter& a, const LParameter& b, const char* op) {
  if (a.side() != b.side()) {
    throw Error(ErrorCode::SideMismatch,
                std::string(op) + ": parameters live on different sides");
  }
}

} // namespace

Side side_of(const Summand& s) noexcept {
  return std::holds_alternative<ComplexCharacter>(s) ? Side::Complex : Side::Real;
}

int dim_of(const Summand& s) noexcept {
  return std::holds_alternative<RealDiscreteSummand>(s) ? 2 : 1;
}

LParameter::LParameter(Side side, std::vector<Summand> summands)
    : side_(side), summands_(std::move(summands)) {
  for (const auto& s : summands_) {
    if (side_of(s) != side_) {
      throw Error(ErrorCode::SideMismatch,
                  std::string("summand does not live on side ") + side_name(side_));
    }
  }
}

LParameter LParameter::complex(const std::vector<ComplexCharacter>& chars) {
  return LParameter(Side::Complex, {chars.begin(), chars.end()});
}

LParameter LParameter::real(const std::vector<RealCharacter>& chars,
                            const std::vector<RealDiscreteSummand>& discrete) {
  std::vector<Summand> all(chars.begin(), chars.end());
  all.insert(all.end(), discrete.begin(), discrete.end());
  return LParameter(Side::Real, std::move(all));
}

int LParameter::dim() const noexcept {
  int d = 0;
  for (const auto& s : summands_) d += dim_of(s);
  return d;
}

bool LParameter::is_canonical() const noexcept {
  if (!std::is_sorted(summands_.begin(), summands_.end())) return false;
  return std::none_of(summands_.begin(), summands_.end(), [](const Summand& s) {
    const auto* d = std::get_if<RealDiscreteSummand>(&s);
    return d != nullptr && d->ell < 1;
  });
}

LParameter direct_sum(const LParameter& a, const LParameter& b) {
  require_same_side(a, b, "direct_sum");
  std::vector<Summand> all = a.summands();
  all.insert(all.end(), b.summands().begin(), b.summands().end());
  return LParameter(a.side(), std::move(all));
}

ComplexCharacter galois_conjugate(const ComplexCharacter& chi) noexcept {
  return {-chi.ell, chi.t};
}

LParameter canonical_form(const LParameter& p) {
  std::vector<Summand> out;
  out.reserve(p.summands().size() + 1);
  for (const auto& s : p.summands()) {
    const auto* d = std::get_if<RealDiscreteSummand>(&s);
    if (d == nullptr) {
      out.push_back(s);
    } else if (d->ell == 0) {
      out.emplace_back(RealCharacter{Sign::Id, d->t});
      out.emplace_back(RealCharacter{Sign::Sgn, d->t});
    } else {
      out.emplace_back(RealDiscreteSummand{std::abs(d->ell), d->t});
    }
  }
  std::sort(out.begin(), out.end());
  return LParameter(p.side(), std::move(out));
}

bool equivalent(const LParameter& a, const LParameter& b) {
  require_same_side(a, b, "equivalent");
  return canonical_form(a).summands() == canonical_form(b).summands();
}

std::vector<Summand> decompose(const LParameter& p) {
  return canonical_form(p).summands();
}

bool is_irreducible(const LParameter& p) {
  return decompose(p).size() == 1;
}

LParameter restrict_to_C(const LParameter& p) {
  require_side(p, Side::Real, "restrict_to_C");
  std::vector<ComplexCharacter> out;
  const LParameter canon = canonical_form(p);
  for (const auto& s : canon.summands()) {
    if (const auto* c = std::get_if<RealCharacter>(&s)) {
      out.push_back({0, c->t * 2});
    } else {
      const auto& d = std::get<RealDiscreteSummand>(s);
      out.push_back({d.ell, d.t});
      out.push_back({-d.ell, d.t});
    }
  }
  return canonical_form(LParameter::complex(out));
}

LParameter induce_to_R(const ComplexCharacter& chi) {
  if (chi.ell != 0) {
    return LParameter::real({}, {{std::abs(chi.ell), chi.t}});
  }
  const Rational half = chi.t / 2;
  return LParameter::real({{Sign::Id, half}, {Sign::Sgn, half}});
}

std::int64_t hom_dim(const LParameter& a, const LParameter& b) {
  require_same_side(a, b, "hom_dim");
  std::map<Summand, std::int64_t> mult_a;
  for (const auto& s : decompose(a)) ++mult_a[s];
  std::int64_t total = 0;
  for (const auto& s : decompose(b)) {
    if (auto it = mult_a.find(s); it != mult_a.end()) total += it->second;
  }
  return total;
}

} // namespace gltd
