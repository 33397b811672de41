#include "gltd/tempered_dual.hpp"

#include <algorithm>
#include <string>

#include "detail/combinatorics.hpp"
#include "gltd/errors.hpp"

namespace gltd {

namespace {

void require_n(int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidN, "n must be >= 1, got " + std::to_string(n));
  }
}

// Sizes of the runs of equal values in a sorted range, keeping those >= 2.
template <typename It>
void collect_repeats(It first, It last, std::vector<int>& out) {
  while (first != last) {
    auto run_end = std::find_if(first, last, [&](const auto& v) { return v != *first; });
    const auto m = static_cast<int>(std::distance(first, run_end));
    if (m >= 2) out.push_back(m);
    first = run_end;
  }
}

template <typename Coord, typename Key>
void check_labels(std::vector<Key> expected, const std::vector<Coord>& coords,
                  auto&& key_of) {
  std::vector<Key> got;
  got.reserve(coords.size());
  for (const auto& c : coords) got.push_back(key_of(c));
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) {
    throw Error(ErrorCode::LabelMismatch,
                "coordinate slot labels do not match the component");
  }
}

std::vector<RealSlot> slots_of(const RealComponent& c) {
  std::vector<RealSlot> slots;
  for (auto ell : c.discrete()) slots.emplace_back(DiscreteSlot{ell});
  slots.insert(slots.end(), c.id_count(), RealSlot{Sign::Id});
  slots.insert(slots.end(), c.sgn_count(), RealSlot{Sign::Sgn});
  return slots;
}

} // namespace

std::vector<LeviClass> levi_classes(int n) {
  require_n(n);
  std::vector<LeviClass> out;
  for (int q = n / 2; q >= 0; --q) out.push_back({q, n - 2 * q});
  return out;
}

RealComponent::RealComponent(std::vector<std::int64_t> discrete, int id_count,
                             int sgn_count)
    : discrete_(std::move(discrete)), id_count_(id_count), sgn_count_(sgn_count) {
  if (id_count_ < 0 || sgn_count_ < 0) {
    throw Error(ErrorCode::InvalidComponent, "negative sign count");
  }
  for (auto ell : discrete_) {
    if (ell < 1) {
      throw Error(ErrorCode::InvalidComponent,
                  "discrete-series label must be >= 1, got " + std::to_string(ell));
    }
  }
  if (discrete_.empty() && r() == 0) {
    throw Error(ErrorCode::InvalidComponent, "component of GL(0,R)");
  }
  std::sort(discrete_.begin(), discrete_.end());
}

std::strong_ordering RealComponent::operator<=>(const RealComponent& o) const {
  if (auto c = discrete_ <=> o.discrete_; c != 0) return c;
  if (auto c = r() <=> o.r(); c != 0) return c;
  return sgn_count_ <=> o.sgn_count_;
}

ComplexComponent::ComplexComponent(std::vector<std::int64_t> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::InvalidComponent, "component of GL(0,C)");
  }
  std::sort(labels_.begin(), labels_.end());
}

int dimension(const Component& c) noexcept {
  return std::visit([](const auto& x) { return x.dimension(); }, c);
}

int rank_n(const Component& c) noexcept {
  return std::visit([](const auto& x) { return x.n(); }, c);
}

std::int64_t IsotropyDescriptor::order() const noexcept {
  std::int64_t total = 1;
  for (int m : factors) {
    for (int k = 2; k <= m; ++k) total *= k;
  }
  return total;
}

IsotropyDescriptor isotropy(const RealComponent& c) {
  IsotropyDescriptor iso;
  collect_repeats(c.discrete().begin(), c.discrete().end(), iso.factors);
  if (c.id_count() >= 2) iso.factors.push_back(c.id_count());
  if (c.sgn_count() >= 2) iso.factors.push_back(c.sgn_count());
  std::sort(iso.factors.begin(), iso.factors.end());
  return iso;
}

IsotropyDescriptor isotropy(const ComplexComponent& c) {
  IsotropyDescriptor iso;
  collect_repeats(c.labels().begin(), c.labels().end(), iso.factors);
  std::sort(iso.factors.begin(), iso.factors.end());
  return iso;
}

IsotropyDescriptor isotropy(const Component& c) {
  return std::visit([](const auto& x) { return isotropy(x); }, c);
}

bool is_cone(const RealComponent& c) { return !isotropy(c).trivial(); }
bool is_cone(const ComplexComponent& c) { return !isotropy(c).trivial(); }
bool is_cone(const Component& c) { return !isotropy(c).trivial(); }

std::vector<RealComponent> enumerate_components_real(int n, int max_label) {
  require_n(n);
  if (max_label < 1) {
    throw Error(ErrorCode::InvalidTruncation,
                "max label must be >= 1, got " + std::to_string(max_label));
  }
  std::vector<RealComponent> out;
  for (const auto& levi : levi_classes(n)) {
    detail::for_each_sorted_tuple(
        levi.q, 1, max_label, false, [&](const std::vector<std::int64_t>& labels) {
          for (int sgn = 0; sgn <= levi.r; ++sgn) {
            out.emplace_back(labels, levi.r - sgn, sgn);
          }
        });
  }
  return out;
}

std::vector<ComplexComponent> enumerate_components_complex(int n, int max_label) {
  require_n(n);
  if (max_label < 0) {
    throw Error(ErrorCode::InvalidTruncation,
                "max label must be >= 0, got " + std::to_string(max_label));
  }
  std::vector<ComplexComponent> out;
  detail::for_each_sorted_tuple(n, -max_label, max_label, false,
                                [&](const std::vector<std::int64_t>& labels) {
                                  out.emplace_back(labels);
                                });
  return out;
}

RealPoint canonicalize_point(const RealComponent& c, std::vector<RealCoord> raw) {
  check_labels(slots_of(c), raw, [](const RealCoord& x) { return x.slot; });
  std::sort(raw.begin(), raw.end());
  return RealPoint(c, std::move(raw));
}

ComplexPoint canonicalize_point(const ComplexComponent& c,
                                std::vector<ComplexCoord> raw) {
  check_labels(c.labels(), raw, [](const ComplexCoord& x) { return x.ell; });
  std::sort(raw.begin(), raw.end());
  return ComplexPoint(c, std::move(raw));
}

RealPoint canonicalize_point(const RealPoint& p) {
  return canonicalize_point(p.component(), p.coords());
}

ComplexPoint canonicalize_point(const ComplexPoint& p) {
  return canonicalize_point(p.component(), p.coords());
}

RealPoint make_real_point(std::vector<RealCoord> coords) {
  std::vector<std::int64_t> discrete;
  int ids = 0;
  int sgns = 0;
  for (const auto& c : coords) {
    if (const auto* d = std::get_if<DiscreteSlot>(&c.slot)) {
      discrete.push_back(d->ell);
    } else if (std::get<Sign>(c.slot) == Sign::Id) {
      ++ids;
    } else {
      ++sgns;
    }
  }
  RealComponent component(std::move(discrete), ids, sgns);
  return canonicalize_point(component, std::move(coords));
}

ComplexPoint make_complex_point(std::vector<ComplexCoord> coords) {
  std::vector<std::int64_t> labels;
  labels.reserve(coords.size());
  for (const auto& c : coords) labels.push_back(c.ell);
  ComplexComponent component(std::move(labels));
  return canonicalize_point(component, std::move(coords));
}

const RealComponent& component_of(const RealPoint& p) noexcept { return p.component(); }

const ComplexComponent& component_of(const ComplexPoint& p) noexcept {
  return p.component();
}

Component component_of(const TemperedPoint& p) {
  return std::visit([](const auto& x) -> Component { return x.component(); }, p);
}

} // namespace gltd
