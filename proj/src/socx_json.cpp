#include "sogamma/socx_json.hpp"

namespace sogamma {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected rational string, got " + j.dump());
}

ordered_json laurent_to_json(const LaurentPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [pow, c] : p.terms()) arr.push_back({{"pow", pow}, {"coeff", rational_to_json(c)}});
  return arr;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("terms must be an array");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("pow") || !t.contains("coeff") || !t["pow"].is_number_integer())
      throw ParseError("term must be {\"pow\": int, \"coeff\": rational}");
    p.add_term(rational_from_json(t["coeff"]), t["pow"].get<int>());
  }
  return p;
}

namespace {

ordered_json map_entries(const LambdaMap& f, bool with_from, bool with_to) {
  ordered_json arr = ordered_json::array();
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  for (std::size_t g = 0; g < src.rank(); ++g) {
    for (const auto& [h, p] : f.column(g)) {
      ordered_json e;
      if (with_from) e["from"] = src[g].id;
      if (with_to) e["to"] = tgt[h].id;
      e["terms"] = laurent_to_json(p);
      arr.push_back(std::move(e));
    }
  }
  return arr;
}

std::size_t lookup(const BigradedModule& m, const json& e, const char* key) {
  if (!e.contains(key) || !e[key].is_string()) throw ParseError(std::string("entry missing string field '") + key + "'");
  auto idx = m.index_of(e[key].get<std::string>());
  if (!idx) throw ParseError("unknown generator id '" + e[key].get<std::string>() + "'");
  return *idx;
}

void load_entries(const json& doc, const char* key, LambdaMap& f, bool has_from, bool has_to) {
  if (!doc.contains(key)) return;
  const auto& arr = doc[key];
  if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  for (const auto& e : arr) {
    if (!e.is_object() || !e.contains("terms")) throw ParseError(std::string("bad entry in '") + key + "'");
    const std::size_t from = has_from ? lookup(*f.source(), e, "from") : 0;
    const std::size_t to = has_to ? lookup(*f.target(), e, "to") : 0;
    f.add(from, to, laurent_from_json(e["terms"]));
  }
}

}  // namespace

ordered_json to_json(const SOComplex& s) {
  ordered_json doc;
  doc["format"] = kSocxFormat;
  doc["name"] = s.name;
  ordered_json gens = ordered_json::array();
  for (const auto& g : s.module->generators())
    gens.push_back({{"id", g.id}, {"gr", g.gr}, {"iota", rational_to_json(g.iota)}});
  doc["generators"] = std::move(gens);
  doc["d"] = map_entries(s.d, true, true);
  doc["u"] = map_entries(s.u, true, true);
  doc["d1"] = map_entries(s.d1, true, false);
  doc["d2"] = map_entries(s.d2, false, true);
  return doc;
}

SOComplex complex_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("format") || doc["format"] != kSocxFormat)
    throw ParseError(std::string("missing or unsupported format (expected ") + kSocxFormat + ")");
  if (!doc.contains("generators") || !doc["generators"].is_array()) throw ParseError("missing 'generators' array");
  std::vector<Generator> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_object() || !g.contains("id") || !g["id"].is_string() || !g.contains("gr") ||
        !g["gr"].is_number_integer() || !g.contains("iota"))
      throw ParseError("generator must be {\"id\": str, \"gr\": int, \"iota\": rational}");
    gens.push_back({g["id"].get<std::string>(), g["gr"].get<int>(), rational_from_json(g["iota"])});
  }
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
  SOComplex s = make_complex(std::move(name), std::make_shared<const BigradedModule>(std::move(gens)));
  load_entries(doc, "d", s.d, true, true);
  load_entries(doc, "u", s.u, true, true);
  load_entries(doc, "d1", s.d1, true, false);
  load_entries(doc, "d2", s.d2, false, true);
  return s;
}

std::string dump_complex(const SOComplex& s) { return to_json(s).dump(2) + "\n"; }

SOComplex parse_complex(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return complex_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad socx document: ") + e.what());
  }
}

}  // namespace sogamma
