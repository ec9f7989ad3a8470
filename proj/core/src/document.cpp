#include "rbd/document.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "rbd/error.hpp"

namespace rbd {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

json int_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt int_from_json(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer");
}

json rat_to_json(const Rat& r) { return json{{"num", int_to_json(r.num())}, {"den", int_to_json(r.den())}}; }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing key '" + key + "'");
  return *it;
}

Rat rat_from_json(const json& j, const std::string& path) {
  BigInt den = int_from_json(field(j, "den", path), path + "/den");
  if (den.is_zero()) schema_error(path + "/den", "zero denominator");
  return Rat(int_from_json(field(j, "num", path), path + "/num"), std::move(den));
}

bool bool_from_json(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected a boolean");
  return j.get<bool>();
}

std::string string_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t count_from_json(const json& j, const std::string& path) {
  BigInt v = int_from_json(j, path);
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) schema_error(path, "expected a non-negative count");
  return v.convert_to<std::uint64_t>();
}

json symbolic_to_json(const SymbolicValue& v, int precision) {
  SymbolicValue c = canonicalize(v);
  return json{{"sign", c.sign},
              {"coefficient", rat_to_json(c.coefficient)},
              {"pi_power", c.pi_power},
              {"radicand", int_to_json(c.radicand)},
              {"exact", c.to_string()},
              {"decimal", to_decimal(c, precision)}};
}

SymbolicValue symbolic_from_json(const json& j, const std::string& path) {
  SymbolicValue v;
  BigInt sign = int_from_json(field(j, "sign", path), path + "/sign");
  if (sign < -1 || sign > 1) schema_error(path + "/sign", "expected -1, 0 or 1");
  v.sign = sign.convert_to<int>();
  v.coefficient = rat_from_json(field(j, "coefficient", path), path + "/coefficient");
  v.pi_power = static_cast<unsigned>(count_from_json(field(j, "pi_power", path), path + "/pi_power"));
  v.radicand = int_from_json(field(j, "radicand", path), path + "/radicand");
  if (v.radicand < 0) schema_error(path + "/radicand", "negative radicand");
  return canonicalize(v);
}

json char_to_json(const CharNumbers& c) {
  return json{{"euler", int_to_json(c.euler())},
              {"signature", int_to_json(c.signature())},
              {"b1", int_to_json(c.b1())},
              {"b_plus", int_to_json(c.b_plus())},
              {"b_minus", int_to_json(c.b_minus())},
              {"c1_squared", int_to_json(c1_squared(c))},
              {"c2", int_to_json(c.c2())}};
}

CharNumbers char_from_json(const json& j, const std::string& path) {
  return CharNumbers(int_from_json(field(j, "euler", path), path + "/euler"),
                     int_from_json(field(j, "signature", path), path + "/signature"),
                     int_from_json(field(j, "b1", path), path + "/b1"));
}

json conclusion_to_json(const Conclusion& c) {
  return json{{"state", tri_state_name(c.state)}, {"basis", c.basis}};
}

Conclusion conclusion_from_json(const json& j, const std::string& path) {
  Conclusion c;
  std::string state = string_from_json(field(j, "state", path), path + "/state");
  if (state == "yes-derived") {
    c.state = TriState::YesDerived;
  } else if (state == "unknown") {
    c.state = TriState::Unknown;
  } else if (state == "not-applicable") {
    c.state = TriState::NotApplicable;
  } else {
    schema_error(path + "/state", "unknown state '" + state + "'");
  }
  c.basis = string_from_json(field(j, "basis", path), path + "/basis");
  return c;
}

json match_to_json(const BlowdownMatch& m) {
  return json{{"n", int_to_json(m.n)}, {"m", int_to_json(m.m)}, {"orientation", orientation_name(m.orientation)}};
}

BlowdownMatch match_from_json(const json& j, const std::string& path) {
  std::string o = string_from_json(field(j, "orientation", path), path + "/orientation");
  if (o != "forward" && o != "reversed") schema_error(path + "/orientation", "expected forward or reversed");
  return BlowdownMatch{int_from_json(field(j, "n", path), path + "/n"),
                       int_from_json(field(j, "m", path), path + "/m"),
                       o == "forward" ? Orientation::Forward : Orientation::Reversed};
}

json noether_to_json(const NoetherReport& r) {
  return json{{"c1_squared", int_to_json(r.c1_squared)},
              {"chi_h", int_to_json(r.chi_h)},
              {"satisfies_noether", r.satisfies_noether},
              {"on_noether_line", r.on_noether_line},
              {"on_half_noether_line", r.on_half_noether_line},
              {"satisfies_bmy_conventional", r.satisfies_bmy},
              {"provably_non_complex", r.provably_non_complex},
              {"applicable", r.applicable},
              {"minimality_asserted", r.minimality_asserted},
              {"c1_squared_even", r.c1_squared_even}};
}

NoetherReport noether_from_json(const json& j, const std::string& path) {
  NoetherReport r;
  r.c1_squared = int_from_json(field(j, "c1_squared", path), path + "/c1_squared");
  r.chi_h = int_from_json(field(j, "chi_h", path), path + "/chi_h");
  auto flag = [&](const char* key) { return bool_from_json(field(j, key, path), path + "/" + key); };
  r.satisfies_noether = flag("satisfies_noether");
  r.on_noether_line = flag("on_noether_line");
  r.on_half_noether_line = flag("on_half_noether_line");
  r.satisfies_bmy = flag("satisfies_bmy_conventional");
  r.provably_non_complex = flag("provably_non_complex");
  r.applicable = flag("applicable");
  r.minimality_asserted = flag("minimality_asserted");
  r.c1_squared_even = flag("c1_squared_even");
  return r;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line 1, column 2: "
    auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

BlowdownChain chain_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object with {n, m} or {coeffs}");
  if (j.contains("coeffs")) {
    const json& arr = j.at("coeffs");
    if (!arr.is_array()) schema_error(path + "/coeffs", "expected an array");
    std::vector<BigInt> coeffs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      coeffs.push_back(int_from_json(arr[i], path + "/coeffs/" + std::to_string(i)));
    }
    HjChain chain(std::move(coeffs));
    Recognition rec = recognize_blowdown(chain);
    if (!rec) {
      CyclicSingularity s = hj_evaluate(chain);
      throw Error(ErrorKind::UnrecognizedChain, "chain " + chain.to_string() + " at " + path + " evaluates to " +
                                                    s.p().str() + "/" + s.q().str() +
                                                    ", which is not of type n^2/(nm - 1)");
    }
    const BlowdownMatch& m = *rec.best;
    return BlowdownChain{m.n, m.m, m.orientation == Orientation::Forward ? chain : chain.reversed()};
  }
  if (j.contains("n") || j.contains("m")) {
    return blowdown_chain(int_from_json(field(j, "n", path), path + "/n"),
                          int_from_json(field(j, "m", path), path + "/m"));
  }
  schema_error(path, "expected {n, m} or {coeffs}");
}

}  // namespace

ManifoldSpec parse_spec_document(std::string_view text) {
  json doc = parse_json_text(text);
  if (!doc.is_object()) schema_error("", "expected a JSON object");

  static const char* known[] = {"name", "euler", "signature", "b1", "chains", "extra_blowups", "asserted"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) schema_error("/" + key, "unknown key");
  }

  std::string name = doc.contains("name") ? string_from_json(doc["name"], "/name") : std::string("unnamed");
  BigInt euler = int_from_json(field(doc, "euler", ""), "/euler");
  BigInt signature = int_from_json(field(doc, "signature", ""), "/signature");
  BigInt b1 = doc.contains("b1") ? int_from_json(doc["b1"], "/b1") : BigInt(0);

  ManifoldSpec spec{std::move(name), CharNumbers(euler, signature, b1), {}, 0, {}};

  if (doc.contains("chains")) {
    const json& chains = doc["chains"];
    if (!chains.is_array()) schema_error("/chains", "expected an array");
    for (std::size_t i = 0; i < chains.size(); ++i) {
      spec.chains.push_back(chain_from_json(chains[i], "/chains/" + std::to_string(i)));
    }
  }
  if (doc.contains("extra_blowups")) spec.extra_blowups = count_from_json(doc["extra_blowups"], "/extra_blowups");
  if (doc.contains("asserted")) {
    const json& a = doc["asserted"];
    if (!a.is_object()) schema_error("/asserted", "expected an object");
    for (const auto& [key, value] : a.items()) {
      std::string path = "/asserted/" + key;
      if (key == "kaehler") {
        spec.asserted.kaehler = bool_from_json(value, path);
      } else if (key == "orbifold_canonical_ample") {
        spec.asserted.orbifold_canonical_ample = bool_from_json(value, path);
      } else if (key == "c1_dot_omega_negative") {
        spec.asserted.c1_dot_omega_negative = bool_from_json(value, path);
      } else {
        schema_error(path, "unknown hypothesis");
      }
    }
  }
  return spec;
}

std::string spec_to_json(const ManifoldSpec& spec) {
  json chains = json::array();
  for (const auto& c : spec.chains) {
    json coeffs = json::array();
    for (const auto& e : c.chain.coeffs()) coeffs.push_back(int_to_json(e));
    chains.push_back(json{{"n", int_to_json(c.n)}, {"m", int_to_json(c.m)}, {"coeffs", coeffs}});
  }
  // {n, m} and {coeffs} both appear for readability; the parser takes coeffs.
  json doc{{"name", spec.name},
           {"euler", int_to_json(spec.char_numbers.euler())},
           {"signature", int_to_json(spec.char_numbers.signature())},
           {"b1", int_to_json(spec.char_numbers.b1())},
           {"chains", chains},
           {"extra_blowups", spec.extra_blowups},
           {"asserted",
            {{"kaehler", spec.asserted.kaehler},
             {"orbifold_canonical_ample", spec.asserted.orbifold_canonical_ample},
             {"c1_dot_omega_negative", spec.asserted.c1_dot_omega_negative}}}};
  return doc.dump(2);
}

std::string report_to_json(const BlowdownReport& r, int precision) {
  json chains = json::array();
  for (const auto& c : r.chains) {
    json coeffs = json::array();
    for (const auto& e : c.coeffs) coeffs.push_back(int_to_json(e));
    json jc{{"n", int_to_json(c.n)}, {"m", int_to_json(c.m)}, {"length", c.coeffs.size()}, {"coeffs", coeffs}};
    jc["alternate"] = c.alternate ? match_to_json(*c.alternate) : json(nullptr);
    chains.push_back(std::move(jc));
  }
  json doc{{"name", r.name},
           {"input", char_to_json(r.input_char)},
           {"chains", chains},
           {"total_chain_length", r.total_chain_length},
           {"extra_blowups", r.extra_blowups},
           {"minimal_model", char_to_json(r.minimal_char)},
           {"result", char_to_json(r.result_char)},
           {"minimal_c1_squared", int_to_json(r.minimal_c1sq)},
           {"result_c1_squared", int_to_json(r.result_c1sq)},
           {"orbifold_route_c1_squared", rat_to_json(r.orbifold_route_c1sq)},
           {"chi_h", int_to_json(r.chi_h)},
           {"minimal", conclusion_to_json(r.minimal)},
           {"general_type", conclusion_to_json(r.general_type)},
           {"curvature_bound", symbolic_to_json(r.curvature_bound, precision)},
           {"noether", noether_to_json(r.noether)},
           {"notes", r.notes}};
  doc["yamabe"] = r.yamabe ? symbolic_to_json(*r.yamabe, precision) : json(nullptr);
  return doc.dump(2);
}

BlowdownReport report_from_json(std::string_view text) {
  json doc = parse_json_text(text);
  BlowdownReport r;
  r.name = string_from_json(field(doc, "name", ""), "/name");
  r.input_char = char_from_json(field(doc, "input", ""), "/input");
  const json& chains = field(doc, "chains", "");
  if (!chains.is_array()) schema_error("/chains", "expected an array");
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::string path = "/chains/" + std::to_string(i);
    const json& jc = chains[i];
    ChainSummary c;
    c.n = int_from_json(field(jc, "n", path), path + "/n");
    c.m = int_from_json(field(jc, "m", path), path + "/m");
    const json& coeffs = field(jc, "coeffs", path);
    if (!coeffs.is_array()) schema_error(path + "/coeffs", "expected an array");
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      c.coeffs.push_back(int_from_json(coeffs[k], path + "/coeffs/" + std::to_string(k)));
    }
    const json& alt = field(jc, "alternate", path);
    if (!alt.is_null()) c.alternate = match_from_json(alt, path + "/alternate");
    r.chains.push_back(std::move(c));
  }
  r.total_chain_length = count_from_json(field(doc, "total_chain_length", ""), "/total_chain_length");
  r.extra_blowups = count_from_json(field(doc, "extra_blowups", ""), "/extra_blowups");
  r.minimal_char = char_from_json(field(doc, "minimal_model", ""), "/minimal_model");
  r.result_char = char_from_json(field(doc, "result", ""), "/result");
  r.minimal_c1sq = int_from_json(field(doc, "minimal_c1_squared", ""), "/minimal_c1_squared");
  r.result_c1sq = int_from_json(field(doc, "result_c1_squared", ""), "/result_c1_squared");
  r.orbifold_route_c1sq = rat_from_json(field(doc, "orbifold_route_c1_squared", ""), "/orbifold_route_c1_squared");
  r.chi_h = int_from_json(field(doc, "chi_h", ""), "/chi_h");
  r.minimal = conclusion_from_json(field(doc, "minimal", ""), "/minimal");
  r.general_type = conclusion_from_json(field(doc, "general_type", ""), "/general_type");
  const json& y = field(doc, "yamabe", "");
  if (!y.is_null()) r.yamabe = symbolic_from_json(y, "/yamabe");
  r.curvature_bound = symbolic_from_json(field(doc, "curvature_bound", ""), "/curvature_bound");
  r.noether = noether_from_json(field(doc, "noether", ""), "/noether");
  const json& notes = field(doc, "notes", "");
  if (!notes.is_array()) schema_error("/notes", "expected an array");
  for (std::size_t i = 0; i < notes.size(); ++i) {
    r.notes.push_back(string_from_json(notes[i], "/notes/" + std::to_string(i)));
  }
  return r;
}

namespace {

std::string char_line(const CharNumbers& c) {
  std::ostringstream os;
  os << "chi = " << c.euler() << ", tau = " << c.signature() << ", b1 = " << c.b1() << "  (c1^2 = " << c1_squared(c)
     << ", c2 = " << c.c2() << ", b+ = " << c.b_plus() << ", b- = " << c.b_minus() << ")";
  return os.str();
}

std::string noether_line(const NoetherReport& r) {
  std::vector<std::string> parts;
  if (r.on_noether_line) parts.emplace_back("on the Noether line");
  if (r.on_half_noether_line) parts.emplace_back("on the half-Noether line");
  parts.emplace_back(r.satisfies_noether ? "satisfies the Noether inequality" : "violates the Noether inequality");
  parts.emplace_back(r.satisfies_bmy ? "satisfies BMY (conventional)" : "violates BMY (conventional)");
  if (!r.applicable) {
    parts.emplace_back("classification not applicable (needs asserted minimality and c1^2 > 0)");
  } else {
    parts.emplace_back(r.provably_non_complex ? "provably non-complex" : "not ruled out as complex");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

}  // namespace

std::string render_report_text(const BlowdownReport& r, int precision) {
  std::ostringstream os;
  os << r.name << "\n";
  os << "  input            " << char_line(r.input_char) << "\n";
  if (r.chains.empty()) os << "  chains           none (identity transform)\n";
  for (std::size_t i = 0; i < r.chains.size(); ++i) {
    const auto& c = r.chains[i];
    os << (i == 0 ? "  chains           " : "                   ") << "type (" << c.n << ", " << c.m << ") "
       << HjChain(c.coeffs).to_string() << " length " << c.coeffs.size();
    if (c.alternate) {
      os << "  [also reads (" << c.alternate->n << ", " << c.alternate->m << ") "
         << orientation_name(c.alternate->orientation) << "]";
    }
    os << "\n";
  }
  os << "  blowdown N       " << char_line(r.minimal_char) << "\n";
  if (r.extra_blowups > 0) {
    os << "  N # " << r.extra_blowups << " CP2-bar   " << char_line(r.result_char) << "\n";
  }
  os << "  c1^2             " << r.result_c1sq << " (orbifold route " << r.orbifold_route_c1sq << ")\n";
  os << "  chi_h            " << r.chi_h << "\n";
  os << "  minimal          " << tri_state_name(r.minimal.state) << " (" << r.minimal.basis << ")\n";
  os << "  general type     " << tri_state_name(r.general_type.state) << " (" << r.general_type.basis << ")\n";
  if (r.yamabe) {
    os << "  Yamabe           " << r.yamabe->to_string() << " ~ " << to_decimal(*r.yamabe, precision) << "\n";
  } else {
    os << "  Yamabe           not emitted\n";
  }
  os << "  curvature bound  " << r.curvature_bound.to_string() << " ~ " << to_decimal(r.curvature_bound, precision)
     << "\n";
  os << "  Noether          " << noether_line(r.noether) << "\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

std::string prop41_to_json(const Prop41Report& r) {
  json coeffs = json::array();
  for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
    coeffs.push_back(json{{"curve", r.chain[j]}, {"value", rat_to_json(r.coefficients[j])}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"quantity", c.quantity},
                          {"expected", rat_to_json(c.expected)},
                          {"actual", rat_to_json(c.actual)},
                          {"pass", c.pass()}});
  }
  json pairings = json::array();
  for (const auto& [name, v] : r.nakai.pairings) pairings.push_back(json{{"curve", name}, {"value", rat_to_json(v)}});
  json doc{{"n", r.n},
           {"coefficients", coeffs},
           {"fiber_image_squared", rat_to_json(r.fiber_image_sq)},
           {"canonical_squared", rat_to_json(r.canonical_sq)},
           {"nakai", {{"self_intersection", rat_to_json(r.nakai.self_intersection)},
                      {"pairings", pairings},
                      {"ample_evidence", r.nakai.ample_evidence},
                      {"verdict", r.nakai.verdict}}},
           {"checks", checks},
           {"passed", r.passed()}};
  return doc.dump(2);
}

std::string render_prop41_text(const Prop41Report& r) {
  std::ostringstream os;
  if (r.n == 4) {
    os << "X4: E(4) with one (-4) section collapsed to 1/4(1,1)\n";
  } else {
    os << "X" << r.n << ": E(" << r.n << ") with the primed (-" << r.n << ", -2, ..., -2) chain collapsed\n";
  }
  std::size_t width = 10;
  for (const auto& c : r.checks) width = std::max(width, c.quantity.size());
  os << "  " << std::string(width - 8, ' ') << "quantity  expected      actual        result\n";
  for (const auto& c : r.checks) {
    std::string e = c.expected.to_string();
    std::string a = c.actual.to_string();
    os << "  " << std::string(width - c.quantity.size(), ' ') << c.quantity << "  " << e
       << std::string(e.size() < 14 ? 14 - e.size() : 1, ' ') << a << std::string(a.size() < 14 ? 14 - a.size() : 1, ' ')
       << (c.pass() ? "PASS" : "FAIL") << "\n";
  }
  os << "  Nakai: " << r.nakai.verdict << "\n";
  os << (r.passed() ? "all checks PASS\n" : "some checks FAIL\n");
  return os.str();
}

}  // namespace rbd
