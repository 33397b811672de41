#include "gltd/codec.hpp"

#include <string>

#include "gltd/errors.hpp"

namespace gltd::codec {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

const json& member(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Field field_from_json(const json& j) {
  const auto s = as_string(j, "field");
  if (s == "R") return Field::Real;
  if (s == "C") return Field::Complex;
  fail("field must be \"R\" or \"C\", got \"" + s + "\"");
}

Sign sign_from_json(const json& j) {
  const auto s = as_string(j, "sign");
  if (s == "id") return Sign::Id;
  if (s == "sgn") return Sign::Sgn;
  fail("sign must be \"id\" or \"sgn\", got \"" + s + "\"");
}

void require_match(bool ok, const char* what) {
  if (!ok) {
    throw Error(ErrorCode::LabelMismatch,
                std::string("declared ") + what + " does not match the coordinates");
  }
}

// Checks the optional component keys of a point document against the
// component derived from its coordinates.
void check_declared(const json& j, const Component& derived) {
  const bool has_component_keys = j.contains("discrete") || j.contains("signs") ||
                                  j.contains("labels");
  if (has_component_keys) {
    require_match(component_from_json(j) == derived, "component");
  }
  if (j.contains("n")) require_match(as_int(j["n"], "n") == rank_n(derived), "n");
  if (const auto* rc = std::get_if<RealComponent>(&derived)) {
    if (j.contains("q")) require_match(as_int(j["q"], "q") == rc->q(), "q");
    if (j.contains("r")) require_match(as_int(j["r"], "r") == rc->r(), "r");
  }
}

} // namespace

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(as_string(j, "rational"));
}

json to_json(const Component& c) {
  if (const auto* rc = std::get_if<RealComponent>(&c)) {
    json signs = json::array();
    for (int i = 0; i < rc->id_count(); ++i) signs.push_back("id");
    for (int i = 0; i < rc->sgn_count(); ++i) signs.push_back("sgn");
    return {{"field", "R"}, {"n", rc->n()},     {"q", rc->q()},
            {"r", rc->r()}, {"discrete", rc->discrete()}, {"signs", signs}};
  }
  const auto& cc = std::get<ComplexComponent>(c);
  return {{"field", "C"}, {"n", cc.n()}, {"labels", cc.labels()}};
}

Component component_from_json(const json& j) {
  if (field_from_json(member(j, "field")) == Field::Real) {
    std::vector<std::int64_t> discrete;
    if (j.contains("discrete")) {
      for (const auto& x : as_array(j["discrete"], "discrete")) {
        discrete.push_back(as_int(x, "discrete label"));
      }
    }
    int ids = 0;
    int sgns = 0;
    if (j.contains("signs")) {
      for (const auto& s : as_array(j["signs"], "signs")) {
        (sign_from_json(s) == Sign::Id ? ids : sgns) += 1;
      }
    }
    RealComponent c(std::move(discrete), ids, sgns);
    if (j.contains("n")) require_match(as_int(j["n"], "n") == c.n(), "n");
    if (j.contains("q")) require_match(as_int(j["q"], "q") == c.q(), "q");
    if (j.contains("r")) require_match(as_int(j["r"], "r") == c.r(), "r");
    return c;
  }
  std::vector<std::int64_t> labels;
  for (const auto& x : as_array(member(j, "labels"), "labels")) {
    labels.push_back(as_int(x, "label"));
  }
  ComplexComponent c(std::move(labels));
  if (j.contains("n")) require_match(as_int(j["n"], "n") == c.n(), "n");
  return c;
}

json to_json(const RealPoint& p) {
  json out = to_json(Component(p.component()));
  json coords = json::array();
  for (const auto& c : p.coords()) {
    json label;
    if (const auto* d = std::get_if<DiscreteSlot>(&c.slot)) {
      label = d->ell;
    } else {
      label = to_string(std::get<Sign>(c.slot));
    }
    coords.push_back({{"label", label}, {"t", to_json(c.t)}});
  }
  out["coords"] = std::move(coords);
  return out;
}

json to_json(const ComplexPoint& p) {
  json out = to_json(Component(p.component()));
  json coords = json::array();
  for (const auto& c : p.coords()) {
    coords.push_back({{"label", c.ell}, {"t", to_json(c.t)}});
  }
  out["coords"] = std::move(coords);
  return out;
}

json to_json(const TemperedPoint& p) {
  return std::visit([](const auto& x) { return to_json(x); }, p);
}

TemperedPoint point_from_json(const json& j) {
  const Field field = field_from_json(member(j, "field"));
  const auto& coords = as_array(member(j, "coords"), "coords");
  if (field == Field::Real) {
    std::vector<RealCoord> raw;
    for (const auto& c : coords) {
      const auto& label = member(c, "label");
      const Rational t = rational_from_json(member(c, "t"));
      if (label.is_string()) {
        raw.push_back({sign_from_json(label), t});
      } else {
        raw.push_back({DiscreteSlot{as_int(label, "label")}, t});
      }
    }
    RealPoint p = make_real_point(std::move(raw));
    check_declared(j, p.component());
    return p;
  }
  std::vector<ComplexCoord> raw;
  for (const auto& c : coords) {
    raw.push_back({as_int(member(c, "label"), "label"), rational_from_json(member(c, "t"))});
  }
  ComplexPoint p = make_complex_point(std::move(raw));
  check_declared(j, p.component());
  return p;
}

json to_json(const LParameter& p) {
  json summands = json::array();
  for (const auto& s : p.summands()) {
    if (const auto* c = std::get_if<RealCharacter>(&s)) {
      summands.push_back(
          {{"dim", 1}, {"eps", static_cast<int>(c->eps)}, {"t", to_json(c->t)}});
    } else if (const auto* d = std::get_if<RealDiscreteSummand>(&s)) {
      summands.push_back({{"dim", 2}, {"ell", d->ell}, {"t", to_json(d->t)}});
    } else {
      const auto& chi = std::get<ComplexCharacter>(s);
      summands.push_back({{"ell", chi.ell}, {"t", to_json(chi.t)}});
    }
  }
  return {{"side", p.side() == Side::Real ? "R" : "C"},
          {"dim", p.dim()},
          {"summands", std::move(summands)}};
}

LParameter lparameter_from_json(const json& j) {
  const Field side = field_from_json(member(j, "side"));
  std::vector<Summand> summands;
  for (const auto& s : as_array(member(j, "summands"), "summands")) {
    const Rational t = rational_from_json(member(s, "t"));
    if (side == Field::Complex) {
      summands.emplace_back(ComplexCharacter{as_int(member(s, "ell"), "ell"), t});
      continue;
    }
    const auto dim = as_int(member(s, "dim"), "dim");
    if (dim == 1) {
      const auto eps = as_int(member(s, "eps"), "eps");
      if (eps != 0 && eps != 1) fail("eps must be 0 or 1");
      summands.emplace_back(RealCharacter{eps == 0 ? Sign::Id : Sign::Sgn, t});
    } else if (dim == 2) {
      summands.emplace_back(RealDiscreteSummand{as_int(member(s, "ell"), "ell"), t});
    } else {
      fail("real-side summands have dim 1 or 2");
    }
  }
  LParameter p(side == Field::Real ? Side::Real : Side::Complex, std::move(summands));
  if (j.contains("dim") && as_int(j["dim"], "dim") != p.dim()) {
    fail("declared dim does not match the summands");
  }
  return p;
}

json to_json(const KClass& x) {
  json terms = json::array();
  for (const auto& [gen, coeff] : x.terms()) {
    terms.push_back({{"gen", to_json(gen)}, {"coeff", coeff}});
  }
  return {{"degree", x.degree()}, {"terms", std::move(terms)}};
}

KClass kclass_from_json(const json& j) {
  const auto degree = as_int(member(j, "degree"), "degree");
  if (degree != 0 && degree != 1) {
    throw Error(ErrorCode::DegreeMismatch, "degree must be 0 or 1");
  }
  KClass x(static_cast<int>(degree));
  for (const auto& t : as_array(member(j, "terms"), "terms")) {
    x.add(component_from_json(member(t, "gen")), as_int(member(t, "coeff"), "coeff"));
  }
  return x;
}

json to_json(const RepRingElement& x) {
  const bool u1 = x.ring() == RepRing::U1;
  json coeffs = json::array();
  for (const auto& [label, coeff] : x.coeffs()) {
    json l = u1 ? json(label) : json(label == 0 ? "1" : "eps");
    coeffs.push_back({{"label", l}, {"coeff", coeff}});
  }
  return {{"ring", u1 ? "U1" : "Z2"}, {"coeffs", std::move(coeffs)}};
}

RepRingElement repring_from_json(const json& j) {
  const auto ring = as_string(member(j, "ring"), "ring");
  if (ring != "U1" && ring != "Z2") fail("ring must be \"U1\" or \"Z2\"");
  RepRingElement x(ring == "U1" ? RepRing::U1 : RepRing::Z2);
  for (const auto& c : as_array(member(j, "coeffs"), "coeffs")) {
    const auto& label = member(c, "label");
    std::int64_t l = 0;
    if (x.ring() == RepRing::Z2) {
      const auto s = as_string(label, "Z2 label");
      if (s != "1" && s != "eps") fail("Z2 labels are \"1\" and \"eps\"");
      l = s == "1" ? 0 : 1;
    } else {
      l = as_int(label, "U1 label");
    }
    x.add(l, as_int(member(c, "coeff"), "coeff"));
  }
  return x;
}

} // namespace gltd::codec
