#include "gltd/langlands_maps.hpp"

#include <cstdlib>

#include "gltd/errors.hpp"

namespace gltd {

namespace {

void require_side(const LParameter& p, Side side, const char* op) {
  if (p.side() != side) {
    throw Error(ErrorCode::SideMismatch,
                std::string(op) + ": parameter lives on the wrong side");
  }
}

} // namespace

RealPoint llc_real(const LParameter& p) {
  require_side(p, Side::Real, "llc_real");
  std::vector<RealCoord> coords;
  const LParameter canon = canonical_form(p);
  for (const auto& s : canon.summands()) {
    if (const auto* d = std::get_if<RealDiscreteSummand>(&s)) {
      coords.push_back({DiscreteSlot{d->ell}, d->t});
    } else {
      const auto& c = std::get<RealCharacter>(s);
      coords.push_back({c.eps, c.t});
    }
  }
  return make_real_point(std::move(coords));
}

LParameter llc_real_inv(const RealPoint& pt) {
  std::vector<Summand> out;
  for (const auto& c : pt.coords()) {
    if (const auto* d = std::get_if<DiscreteSlot>(&c.slot)) {
      out.emplace_back(RealDiscreteSummand{d->ell, c.t});
    } else {
      out.emplace_back(RealCharacter{std::get<Sign>(c.slot), c.t});
    }
  }
  return canonical_form(LParameter(Side::Real, std::move(out)));
}

ComplexPoint llc_complex(const LParameter& p) {
  require_side(p, Side::Complex, "llc_complex");
  std::vector<ComplexCoord> coords;
  for (const auto& s : p.summands()) {
    const auto& chi = std::get<ComplexCharacter>(s);
    coords.push_back({chi.ell, chi.t});
  }
  return make_complex_point(std::move(coords));
}

LParameter llc_complex_inv(const ComplexPoint& pt) {
  std::vector<ComplexCharacter> out;
  for (const auto& c : pt.coords()) out.push_back({c.ell, c.t});
  return canonical_form(LParameter::complex(out));
}

ComplexPoint base_change_point(const RealPoint& pt) {
  std::vector<ComplexCoord> out;
  for (const auto& c : pt.coords()) {
    if (const auto* d = std::get_if<DiscreteSlot>(&c.slot)) {
      out.push_back({d->ell, c.t});
      out.push_back({-d->ell, c.t});
    } else {
      out.push_back({0, c.t * 2});
    }
  }
  return make_complex_point(std::move(out));
}

RealPoint auto_induce_point(const ComplexPoint& pt) {
  std::vector<RealCoord> out;
  for (const auto& c : pt.coords()) {
    if (c.ell != 0) {
      out.push_back({DiscreteSlot{std::abs(c.ell)}, c.t});
    } else {
      const Rational half = c.t / 2;
      out.push_back({Sign::Id, half});
      out.push_back({Sign::Sgn, half});
    }
  }
  return make_real_point(std::move(out));
}

ComplexComponent base_change_component(const RealComponent& c) {
  std::vector<std::int64_t> labels;
  for (auto ell : c.discrete()) {
    labels.push_back(ell);
    labels.push_back(-ell);
  }
  labels.insert(labels.end(), static_cast<std::size_t>(c.r()), 0);
  return ComplexComponent(std::move(labels));
}

RealComponent auto_induce_component(const ComplexComponent& c) {
  std::vector<std::int64_t> discrete;
  int zeros = 0;
  for (auto ell : c.labels()) {
    if (ell == 0) {
      ++zeros;
    } else {
      discrete.push_back(std::abs(ell));
    }
  }
  return RealComponent(std::move(discrete), zeros, zeros);
}

} // namespace gltd
