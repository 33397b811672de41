#include "gltd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gltd/codec.hpp"
#include "gltd/errors.hpp"
#include "gltd/langlands_maps.hpp"

namespace gltd::cli {

using json = nlohmann::json;

namespace {

struct HelpRequested {
  std::string text;
};

const char* kVerbNames[] = {"components", "kgroup",     "llc",       "basechange",
                            "autoinduce", "kmap",       "repring-bc"};

// Raw option strings collected by CLI11 before validation.
struct RawOptions {
  std::string format = "json";
  std::optional<std::string> field;
  std::optional<int> n;
  std::optional<int> max_label;
  std::optional<int> degree;
  std::optional<std::string> map;
  std::optional<std::string> param;
  std::optional<std::string> point;
  std::optional<std::string> kclass;
  std::optional<std::string> element;
};

json read_payload(const std::string& flag, const std::string& value, std::istream& in) {
  std::string text;
  if (value == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!value.empty() && value.front() == '@') {
    std::ifstream file(value.substr(1));
    if (!file) throw UsageError(flag + ": cannot open '" + value.substr(1) + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  } else {
    text = value;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(flag + ": malformed JSON payload (" + e.what() + ")");
  }
}

void require(bool present, const std::string& flag, Verb verb) {
  if (!present) {
    throw UsageError(flag + " is required for '" + to_string(verb) + "'");
  }
}

json point_doc(const char* op, const TemperedPoint& p) {
  return {{"kind", "point"}, {"op", op}, {"point", codec::to_json(p)}};
}

json parameter_doc(const char* op, const LParameter& p) {
  return {{"kind", "parameter"}, {"op", op}, {"parameter", codec::to_json(p)}};
}

json exec_components(const Command& cmd) {
  std::vector<Component> comps;
  if (*cmd.field == Field::Real) {
    for (auto& c : enumerate_components_real(*cmd.n, *cmd.max_label)) comps.emplace_back(c);
  } else {
    for (auto& c : enumerate_components_complex(*cmd.n, *cmd.max_label)) comps.emplace_back(c);
  }
  json list = json::array();
  for (const auto& c : comps) {
    const auto ranks = k_ranks_component(c);
    list.push_back({{"component", codec::to_json(c)},
                    {"dimension", dimension(c)},
                    {"cone", is_cone(c)},
                    {"isotropy", isotropy(c).factors},
                    {"k_ranks", {ranks.k0, ranks.k1}}});
  }
  return {{"kind", "components"},
          {"field", to_string(*cmd.field)},
          {"n", *cmd.n},
          {"max_label", *cmd.max_label},
          {"count", comps.size()},
          {"components", std::move(list)}};
}

json exec_kgroup(const Command& cmd) {
  const auto group = k_group(*cmd.field, *cmd.n, *cmd.max_label);
  json degrees = json::array();
  for (int j = 0; j < 2; ++j) {
    if (cmd.degree && *cmd.degree != j) continue;
    json gens = json::array();
    for (const auto& g : group.generators(j)) gens.push_back(codec::to_json(g));
    degrees.push_back({{"degree", j},
                       {"rank", group.rank(j)},
                       {"closed_form_count", group.schema().count(j, group.max_label())},
                       {"schema", group.schema().describe(j)},
                       {"generators", std::move(gens)}});
  }
  return {{"kind", "kgroup"},
          {"field", to_string(*cmd.field)},
          {"n", *cmd.n},
          {"max_label", *cmd.max_label},
          {"degrees", std::move(degrees)}};
}

json exec_llc(const Command& cmd) {
  if (cmd.param) {
    const auto p = codec::lparameter_from_json(*cmd.param);
    if (p.side() == Side::Real) return point_doc("llc", llc_real(p));
    return point_doc("llc", llc_complex(p));
  }
  const auto pt = codec::point_from_json(*cmd.point);
  if (const auto* rp = std::get_if<RealPoint>(&pt)) {
    return parameter_doc("llc-inverse", llc_real_inv(*rp));
  }
  return parameter_doc("llc-inverse", llc_complex_inv(std::get<ComplexPoint>(pt)));
}

json exec_basechange(const Command& cmd) {
  if (cmd.param) {
    return parameter_doc("basechange", restrict_to_C(codec::lparameter_from_json(*cmd.param)));
  }
  const auto pt = codec::point_from_json(*cmd.point);
  const auto* rp = std::get_if<RealPoint>(&pt);
  if (rp == nullptr) {
    throw Error(ErrorCode::SideMismatch, "basechange expects a point over R");
  }
  return point_doc("basechange", base_change_point(*rp));
}

json exec_autoinduce(const Command& cmd) {
  if (cmd.param) {
    const auto p = codec::lparameter_from_json(*cmd.param);
    if (p.side() != Side::Complex) {
      throw Error(ErrorCode::SideMismatch, "autoinduce expects a C-side parameter");
    }
    LParameter out(Side::Real, {});
    for (const auto& s : p.summands()) {
      out = direct_sum(out, induce_to_R(std::get<ComplexCharacter>(s)));
    }
    return parameter_doc("autoinduce", canonical_form(out));
  }
  const auto pt = codec::point_from_json(*cmd.point);
  const auto* cp = std::get_if<ComplexPoint>(&pt);
  if (cp == nullptr) {
    throw Error(ErrorCode::SideMismatch, "autoinduce expects a point over C");
  }
  return point_doc("autoinduce", auto_induce_point(*cp));
}

json exec_kmap(const Command& cmd) {
  const bool bc = *cmd.map == HomKind::BaseChange;
  const auto h = bc ? k_bc_hom(*cmd.n) : k_ai_hom(*cmd.n);
  if (cmd.kclass) {
    const auto image = apply_hom(h, codec::kclass_from_json(*cmd.kclass));
    return {{"kind", "kclass"},
            {"op", "kmap"},
            {"map", h.name()},
            {"n", *cmd.n},
            {"class", codec::to_json(image)}};
  }
  const auto domain = k_group(h.domain().field(), h.domain().n(), *cmd.max_label);
  json degrees = json::array();
  for (int j = 0; j < 2; ++j) {
    if (cmd.degree && *cmd.degree != j) continue;
    json images = json::array();
    for (const auto& g : domain.generators(j)) {
      images.push_back({{"gen", codec::to_json(g)}, {"image", codec::to_json(h.image(g, j))}});
    }
    degrees.push_back({{"degree", j}, {"images", std::move(images)}});
  }
  return {{"kind", "kmap"},
          {"map", h.name()},
          {"n", *cmd.n},
          {"max_label", *cmd.max_label},
          {"degrees", std::move(degrees)}};
}

json exec_repring(const Command& cmd) {
  const auto image = repring_bc(codec::repring_from_json(*cmd.element));
  return {{"kind", "repring"}, {"op", "repring-bc"}, {"element", codec::to_json(image)}};
}

// -- table rendering ---------------------------------------------------------

std::string component_text(const json& c) {
  std::string out = "GL(" + std::to_string(c["n"].get<int>()) + "," +
                    c["field"].get<std::string>() + ") {";
  bool first = true;
  auto append = [&](const std::string& s) {
    if (!first) out += ",";
    out += s;
    first = false;
  };
  if (c["field"] == "R") {
    for (const auto& d : c["discrete"]) append("D" + std::to_string(d.get<std::int64_t>()));
    for (const auto& s : c["signs"]) append(s.get<std::string>());
  } else {
    for (const auto& l : c["labels"]) append(std::to_string(l.get<std::int64_t>()));
  }
  return out + "}";
}

std::string label_text(const json& label) {
  return label.is_string() ? label.get<std::string>()
                           : std::to_string(label.get<std::int64_t>());
}

std::string kclass_text(const json& x) {
  if (x["terms"].empty()) return "0";
  std::string out;
  for (const auto& t : x["terms"]) {
    const auto k = t["coeff"].get<std::int64_t>();
    if (!out.empty()) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += "-";
    const auto a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a) + "*";
    out += "[" + component_text(t["gen"]) + "]";
  }
  return out;
}

std::string render_table(const json& doc) {
  std::ostringstream os;
  const auto kind = doc.value("kind", "");
  if (kind == "components") {
    os << doc["count"] << " components of GL(" << doc["n"] << "," << doc["field"].get<std::string>()
       << "), labels bounded by " << doc["max_label"] << "\n";
    for (const auto& e : doc["components"]) {
      os << "  " << component_text(e["component"]) << "  dim=" << e["dimension"]
         << (e["cone"].get<bool>() ? "  cone" : "  K=(" + std::to_string(e["k_ranks"][0].get<int>()) +
                                                    "," + std::to_string(e["k_ranks"][1].get<int>()) + ")")
         << "\n";
    }
  } else if (kind == "kgroup") {
    for (const auto& d : doc["degrees"]) {
      os << "K_" << d["degree"] << "(C*_r GL(" << doc["n"] << "," << doc["field"].get<std::string>()
         << ")): rank " << d["rank"] << " at L=" << doc["max_label"] << "; "
         << d["schema"].get<std::string>() << "\n";
      for (const auto& g : d["generators"]) os << "  [" << component_text(g) << "]\n";
    }
  } else if (kind == "point") {
    const auto& p = doc["point"];
    os << component_text(p) << " at (";
    bool first = true;
    for (const auto& c : p["coords"]) {
      os << (first ? "" : ", ") << label_text(c["label"]) << ":" << c["t"].get<std::string>();
      first = false;
    }
    os << ")\n";
  } else if (kind == "parameter") {
    const auto& p = doc["parameter"];
    os << p["side"].get<std::string>() << "-side parameter, dim " << p["dim"] << ":";
    for (const auto& s : p["summands"]) {
      if (!s.contains("dim")) {
        os << " chi(" << s["ell"] << "," << s["t"].get<std::string>() << ")";
      } else if (s["dim"] == 1) {
        os << " char(" << (s["eps"] == 0 ? "id" : "sgn") << "," << s["t"].get<std::string>() << ")";
      } else {
        os << " D(" << s["ell"] << "," << s["t"].get<std::string>() << ")";
      }
    }
    os << "\n";
  } else if (kind == "kclass") {
    os << "degree " << doc["class"]["degree"] << ": " << kclass_text(doc["class"]) << "\n";
  } else if (kind == "kmap") {
    for (const auto& d : doc["degrees"]) {
      os << "K_" << d["degree"] << "(" << doc["map"].get<std::string>() << "), n=" << doc["n"] << "\n";
      for (const auto& e : d["images"]) {
        os << "  [" << component_text(e["gen"]) << "] -> " << kclass_text(e["image"]) << "\n";
      }
    }
  } else if (kind == "repring") {
    const auto& e = doc["element"];
    os << "R(" << (e["ring"] == "U1" ? "U(1)" : "Z/2Z") << "):";
    if (e["coeffs"].empty()) os << " 0";
    for (const auto& c : e["coeffs"]) os << " " << c["coeff"] << "*" << label_text(c["label"]);
    os << "\n";
  } else {
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

} // namespace

const char* to_string(Verb v) noexcept { return kVerbNames[static_cast<int>(v)]; }

Command parse_command(const std::vector<std::string>& args, std::istream& stdin_source) {
  CLI::App app{"Tempered duals of GL(n,R) and GL(n,C), their K-theory, base change and "
               "automorphic induction",
               "gltd"};
  app.require_subcommand(1);
  RawOptions raw;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", raw.field, "R or C")->required()->check(CLI::IsMember({"R", "C"}));
  };
  auto add_payloads = [&](CLI::App* sub) {
    auto* p = sub->add_option("--param", raw.param, "L-parameter JSON (- for stdin, @file)");
    auto* q = sub->add_option("--point", raw.point, "Tempered point JSON (- for stdin, @file)");
    p->excludes(q);
  };

  auto* components = app.add_subcommand("components", "List components of the tempered dual");
  add_field(components);
  components->add_option("--n", raw.n)->required();
  components->add_option("--max-label", raw.max_label)->required();
  add_format(components);

  auto* kgroup = app.add_subcommand("kgroup", "K-groups with labeled generators");
  add_field(kgroup);
  kgroup->add_option("--n", raw.n)->required();
  kgroup->add_option("--max-label", raw.max_label)->required();
  kgroup->add_option("--degree", raw.degree);
  add_format(kgroup);

  auto* llc = app.add_subcommand("llc", "Local Langlands correspondence (--param) or its inverse (--point)");
  add_payloads(llc);
  add_format(llc);

  auto* bc = app.add_subcommand("basechange", "Base change of a point over R or an R-side parameter");
  add_payloads(bc);
  add_format(bc);

  auto* ai = app.add_subcommand("autoinduce", "Automorphic induction of a point over C or a C-side parameter");
  add_payloads(ai);
  add_format(ai);

  auto* kmap = app.add_subcommand("kmap", "Induced K-theory map of base change or automorphic induction");
  kmap->add_option("--map", raw.map, "bc or ai")->required()->check(CLI::IsMember({"bc", "ai"}));
  kmap->add_option("--n", raw.n)->required();
  kmap->add_option("--class", raw.kclass, "K-class JSON (- for stdin, @file)");
  kmap->add_option("--max-label", raw.max_label, "Tabulate images of truncated generators");
  kmap->add_option("--degree", raw.degree);
  add_format(kmap);

  auto* repring = app.add_subcommand("repring-bc", "R(U(1)) -> R(Z/2Z) map");
  repring->add_option("--element", raw.element, "R(U(1)) element JSON (- for stdin, @file)")
      ->required();
  add_format(repring);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      std::find(std::begin(kVerbNames), std::end(kVerbNames), args.front()) == std::end(kVerbNames)) {
    throw UsageError("unknown subcommand '" + args.front() + "'");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  auto* chosen = app.get_subcommands().front();
  for (int v = 0; v < 7; ++v) {
    if (chosen->get_name() == kVerbNames[v]) cmd.verb = static_cast<Verb>(v);
  }
  cmd.format = raw.format == "table" ? Format::Table : Format::Json;
  if (raw.field) cmd.field = *raw.field == "R" ? Field::Real : Field::Complex;
  if (raw.map) cmd.map = *raw.map == "bc" ? HomKind::BaseChange : HomKind::AutoInduce;
  cmd.n = raw.n;
  cmd.max_label = raw.max_label;
  cmd.degree = raw.degree;

  if (cmd.n && *cmd.n < 1) throw UsageError("--n: n must be >= 1, got " + std::to_string(*cmd.n));
  if (cmd.degree && *cmd.degree != 0 && *cmd.degree != 1) {
    throw UsageError("--degree: degree must be 0 or 1");
  }
  if (cmd.max_label) {
    const int floor = cmd.verb == Verb::Components && cmd.field == Field::Complex ? 0 : 1;
    if (*cmd.max_label < floor) {
      throw UsageError("--max-label: must be >= " + std::to_string(floor));
    }
  }

  switch (cmd.verb) {
    case Verb::Llc:
    case Verb::BaseChange:
    case Verb::AutoInduce:
      require(raw.param || raw.point, "--param or --point", cmd.verb);
      break;
    case Verb::KMap:
      require(raw.kclass || raw.max_label, "--class or --max-label", cmd.verb);
      break;
    default:
      break;
  }

  if (raw.param) cmd.param = read_payload("--param", *raw.param, stdin_source);
  if (raw.point) cmd.point = read_payload("--point", *raw.point, stdin_source);
  if (raw.kclass) cmd.kclass = read_payload("--class", *raw.kclass, stdin_source);
  if (raw.element) cmd.element = read_payload("--element", *raw.element, stdin_source);
  return cmd;
}

json execute(const Command& cmd) {
  switch (cmd.verb) {
    case Verb::Components: return exec_components(cmd);
    case Verb::KGroup: return exec_kgroup(cmd);
    case Verb::Llc: return exec_llc(cmd);
    case Verb::BaseChange: return exec_basechange(cmd);
    case Verb::AutoInduce: return exec_autoinduce(cmd);
    case Verb::KMap: return exec_kmap(cmd);
    case Verb::RepringBc: return exec_repring(cmd);
  }
  throw std::logic_error("unhandled verb");
}

std::string render(const json& doc, Format format) {
  if (format == Format::Table) return render_table(doc);
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  auto report = [&](const std::string& code, const std::string& detail) {
    err << json{{"error", code}, {"detail", detail}}.dump() << "\n";
  };
  try {
    const auto cmd = parse_command(args, in);
    out << render(execute(cmd), cmd.format);
    return 0;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    report("UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    report(gltd::to_string(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    report("InternalError", e.what());
    return 3;
  }
}

} // namespace gltd::cli
