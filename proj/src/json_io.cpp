#include "wfm/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wfm::io {

namespace {

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string{"missing field '"} + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string{"field '"} + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t int_or(const json& j, const char* key, std::int64_t fallback) {
  return j.contains(key) ? require_int(j, key) : fallback;
}

RationalBaseClass rational_vector(const json& j, std::size_t rank, const char* what) {
  if (!j.is_array() || j.size() != rank)
    throw std::invalid_argument(std::string{what} + " must be an array of length " + std::to_string(rank));
  RationalBaseClass out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json rational_array(const RationalBaseClass& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

json to_json(const Rational& q) { return to_string(q); }

BasePtr base_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("base specification must be an object");
  IntMatrix gram = j.at("gram").get<IntMatrix>();
  BaseClass canonical{j.at("canonical").get<std::vector<std::int64_t>>()};
  std::vector<BaseClass> effective;
  for (const auto& g : j.at("effective")) effective.push_back(BaseClass{g.get<std::vector<std::int64_t>>()});
  return make_base(j.value("name", std::string{"custom"}), std::move(gram), std::move(canonical),
                   std::move(effective));
}

json to_json(const BaseSurface& base) {
  json eff = json::array();
  for (const auto& g : base.effective_generators()) eff.push_back(g.coords);
  return json{{"name", base.name()}, {"gram", base.gram()}, {"canonical", base.canonical().coords}, {"effective", eff}};
}

BasePtr load_base(const std::string& preset_or_path) {
  for (const auto& name : base_preset_names())
    if (name == preset_or_path) return make_base(name);
  std::ifstream in(preset_or_path);
  if (!in) throw std::invalid_argument("unknown base '" + preset_or_path + "' (not a preset or readable file)");
  return base_from_json(json::parse(in));
}

BaseClass base_class_from_json(const json& j, const BaseSurface& base) {
  if (!j.is_array()) throw std::invalid_argument("base class must be an integer array");
  BaseClass c{j.get<std::vector<std::int64_t>>()};
  if (c.rank() != base.rank())
    throw std::invalid_argument("base class has length " + std::to_string(c.rank()) + ", expected " +
                                std::to_string(base.rank()));
  return c;
}

json to_json(const BaseClass& c) { return c.coords; }

Dim2Chern dim2_from_json(const json& j, const BaseSurface& base) {
  Dim2Chern g;
  g.C = base_class_from_json(j.at("C"), base);
  g.alpha = j.contains("alpha") ? base_class_from_json(j.at("alpha"), base) : base.zero();
  g.k2 = require_int(j, "k2");
  g.n = require_int(j, "n");
  return g;
}

json to_json(const Dim2Chern& g) {
  return json{{"C", g.C.coords}, {"alpha", g.alpha.coords}, {"k2", g.k2}, {"n", g.n}};
}

Dim1Chern dim1_from_json(const json& j, const BaseSurface& base) {
  return Dim1Chern{base_class_from_json(j.at("C"), base), require_int(j, "m"), require_int(j, "chi")};
}

json to_json(const Dim1Chern& g) { return json{{"C", g.C.coords}, {"m", g.m}, {"chi", g.chi}}; }

K3Invariants k3_from_json(const json& j) {
  return K3Invariants{require_int(j, "r"), int_or(j, "m", 0), int_or(j, "l", 0), require_int(j, "n")};
}

json to_json(const K3Invariants& v) { return json{{"r", v.r}, {"m", v.m}, {"l", v.l}, {"n", v.n}}; }

DivisorX divisor_from_json(const json& j, const BasePtr& base) {
  return DivisorX{base, rational_from_json(j.at("theta")), rational_vector(j.at("pullback"), base->rank(), "pullback")};
}

json to_json(const DivisorX& d) { return json{{"theta", to_json(d.theta)}, {"pullback", rational_array(d.pullback)}}; }

CurveX curve_from_json(const json& j, const BasePtr& base) {
  return CurveX{base, rational_from_json(j.at("fiber")), rational_vector(j.at("section"), base->rank(), "section")};
}

json to_json(const CurveX& c) { return json{{"fiber", to_json(c.fiber)}, {"section", rational_array(c.section)}}; }

json to_json(const ChernVector& v) {
  return json{{"ch0", to_json(v.ch0)}, {"ch1", to_json(v.ch1)}, {"ch2", to_json(v.ch2)}, {"ch3", to_json(v.ch3)}};
}

InvariantTable table_from_json(const json& j) {
  InvariantTable t;
  t.kind = parse_invariant_kind(j.at("kind").get<std::string>());
  const std::string space = j.value("space", std::string{"Xhat"});
  if (space != "Xhat" && space != "X") throw std::invalid_argument("space must be \"Xhat\" or \"X\"");
  t.space = space == "X" ? Space::X : Space::Xhat;
  if (j.contains("notes")) t.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& e : j.at("entries")) {
    Charge c{require_int(e, "r"), require_int(e, "n"), require_int(e, "k")};
    if (!t.entries.emplace(c, rational_from_json(e.at("value"))).second)
      throw std::invalid_argument("duplicate table entry");
  }
  return t;
}

json to_json(const InvariantTable& t) {
  json entries = json::array();
  for (const auto& [c, v] : t.entries)
    entries.push_back(json{{"r", c[0]}, {"n", c[1]}, {"k", c[2]}, {"value", to_json(v)}});
  json out{{"kind", to_string(t.kind)}, {"space", to_string(t.space)}, {"entries", entries}};
  if (!t.notes.empty()) out["notes"] = t.notes;
  return out;
}

json to_json(const ZSeries& z) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < z.series.precision(); ++i) {
    const Rational e = z.series.offset() + Rational(static_cast<long>(i));
    coeffs.push_back(json{{"exp", to_int64(e)}, {"value", to_string(z.series[i])}});
  }
  return json{{"r", z.r},
              {"k", z.k},
              {"order", z.order},
              {"convention", to_string(z.convention)},
              {"offset", to_string(z.series.offset())},
              {"grading_shift", to_string(z.grading_shift)},
              {"notes", z.notes},
              {"coeffs", coeffs}};
}

std::string to_csv(const ZSeries& z) {
  std::ostringstream out;
  out << "# r=" << z.r << " k=" << z.k << " convention=" << to_string(z.convention)
      << " grading_shift=" << to_string(z.grading_shift) << "\n";
  for (const auto& note : z.notes) out << "# " << note << "\n";
  out << "exp,value\n";
  for (std::size_t i = 0; i < z.series.precision(); ++i)
    out << to_string(z.series.offset() + Rational(static_cast<long>(i))) << "," << to_string(z.series[i]) << "\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  return json::parse(in);
}

}  // namespace wfm::io
