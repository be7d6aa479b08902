#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "mhc/classes.hpp"
#include "mhc/degeneration.hpp"
#include "mhc/equivariant.hpp"
#include "mhc/error.hpp"
#include "mhc/hodge.hpp"
#include "mhc/poly_io.hpp"
#include "mhc/spectra.hpp"

// Structured file formats. All files are JSON; polynomials and class expressions
// are strings in their text grammars, rationals are strings "p/q" (plain integers
// are accepted too).

namespace mhc::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

inline std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

inline std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline Integer as_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return decimal_integer(s);
    } catch (const PreconditionError&) {
      throw SchemaError(where + ": '" + s + "' is not an integer");
    }
  }
  throw SchemaError(where + ": expected an integer");
}

inline json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

inline Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  throw SchemaError(where + ": expected a rational as \"p/q\"");
}

inline json rational_json(const Rational& r) { return json(to_string(r)); }

inline ComponentSet as_subset(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of component ids");
  ComponentSet s;
  for (const auto& id : j)
    if (!s.insert(as_string(id, where)).second) throw SchemaError(where + ": repeated component id");
  return s;
}

inline json subset_json(const ComponentSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

inline ClassExpr as_class(const json& j, const std::string& where) {
  const std::string text = as_string(j, where);
  try {
    return parse_class(text);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what() + " in \"" + text + "\"");
  }
}

inline Poly as_poly(const json& j, const std::string& where) {
  const std::string text = as_string(j, where);
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what() + " in \"" + text + "\"");
  }
}

}  // namespace detail

// ---- Hodge tables: [{"p": "1/2", "q": "1/2", "dim": 1}, ...]

inline HodgeTable hodge_table_from_json(const json& j, const std::string& where = "hodge") {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of {p, q, dim} records");
  HodgeTable t;
  for (const auto& rec : j) {
    Rational p = detail::as_rational(detail::field(rec, "p", where), where + ".p");
    Rational q = detail::as_rational(detail::field(rec, "q", where), where + ".q");
    t[{p, q}] += detail::as_integer(detail::field(rec, "dim", where), where + ".dim");
  }
  return t;
}

inline json to_json(const HodgeStructure& h) {
  json arr = json::array();
  for (const auto& [pq, d] : h.dims())
    arr.push_back({{"p", detail::rational_json(pq.first)}, {"q", detail::rational_json(pq.second)},
                   {"dim", detail::integer_json(d)}});
  return arr;
}

// ---- Equivariant structures: [{"weight": 0, "angle": "1/2", "hodge": [{"p": 0, "q": 0, "dim": 1}]}]

inline EigenPieces eigen_pieces_from_json(const json& j, const std::string& where = "structure") {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of {weight, angle, hodge} records");
  EigenPieces pieces;
  for (const auto& rec : j) {
    const std::int64_t k = detail::as_int(detail::field(rec, "weight", where), where + ".weight");
    const Rational a = detail::as_rational(detail::field(rec, "angle", where), where + ".angle");
    const json& hodge = detail::field(rec, "hodge", where);
    if (!hodge.is_array()) throw SchemaError(where + ".hodge: expected an array");
    for (const auto& h : hodge) {
      const std::int64_t p = detail::as_int(detail::field(h, "p", where), where + ".hodge.p");
      const std::int64_t q = detail::as_int(detail::field(h, "q", where), where + ".hodge.q");
      pieces[{k, a}][{p, q}] += detail::as_integer(detail::field(h, "dim", where), where + ".hodge.dim");
    }
  }
  return pieces;
}

inline json to_json(const EquivariantHodgeStructure& e) {
  json arr = json::array();
  for (const auto& [key, table] : e.pieces()) {
    json hodge = json::array();
    for (const auto& [pq, d] : table) hodge.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", detail::integer_json(d)}});
    arr.push_back({{"weight", key.first}, {"angle", detail::rational_json(key.second)}, {"hodge", hodge}});
  }
  return arr;
}

// ---- Degenerations

/// Reads a degeneration file and checks it. Schema problems and invalid
/// stratifications both raise SchemaError.
inline Stratification stratification_from_json(const json& j) {
  const std::string where = "degeneration";
  Stratification s;
  const json& comps = detail::field(j, "components", where);
  if (!comps.is_array()) throw SchemaError("components: expected an array");
  for (const auto& c : comps) {
    Component comp;
    comp.id = detail::as_string(detail::field(c, "id", "components"), "components.id");
    if (comp.id.empty()) throw SchemaError("components.id: empty id");
    if (c.contains("multiplicity"))
      comp.multiplicity = static_cast<int>(detail::as_int(c["multiplicity"], "components.multiplicity"));
    s.components.push_back(std::move(comp));
  }
  const json& strata = detail::field(j, "strata", where);
  if (!strata.is_array()) throw SchemaError("strata: expected an array");
  std::size_t with_e = 0;
  StrataMap e_map;
  for (const auto& rec : strata) {
    ComponentSet J = detail::as_subset(detail::field(rec, "subset", "strata"), "strata.subset");
    const std::string where_j = "strata " + format_subset(J);
    if (s.strata_d.contains(J)) throw SchemaError(where_j + ": listed twice");
    s.strata_d.emplace(J, detail::as_class(detail::field(rec, "classD", where_j), where_j + ".classD"));
    if (rec.contains("classE")) {
      ++with_e;
      e_map.emplace(J, detail::as_class(rec["classE"], where_j + ".classE"));
    }
  }
  if (with_e != 0 && with_e != s.strata_d.size())
    throw SchemaError("strata: classE must be given for every stratum or for none");
  if (with_e != 0) s.strata_e = std::move(e_map);
  if (j.contains("relative_dim")) {
    const std::int64_t n = detail::as_int(j["relative_dim"], "relative_dim");
    if (n < 0) throw SchemaError("relative_dim: must be >= 0");
    s.relative_dim = static_cast<int>(n);
  }
  auto issues = validate_stratification(s);
  if (!issues.empty()) {
    std::string msg = "invalid stratification:";
    for (const auto& i : issues) msg += "\n  " + i.message;
    throw SchemaError(msg);
  }
  return s;
}

inline json to_json(const Stratification& s) {
  json j;
  j["components"] = json::array();
  for (const auto& c : s.components) j["components"].push_back({{"id", c.id}, {"multiplicity", c.multiplicity}});
  j["strata"] = json::array();
  for (const auto& [J, cls] : s.strata_d) {
    json rec{{"subset", detail::subset_json(J)}, {"classD", cls.to_string()}};
    if (s.strata_e) {
      auto it = s.strata_e->find(J);
      rec["classE"] = it == s.strata_e->end() ? std::string("0") : it->second.to_string();
    }
    j["strata"].push_back(rec);
  }
  if (s.relative_dim) j["relative_dim"] = *s.relative_dim;
  return j;
}

inline BlowupCenter blowup_center_from_json(const json& j) {
  const std::string where = "blow-up move";
  BlowupCenter c;
  c.contained_in = detail::as_subset(detail::field(j, "A", where), "A");
  c.codim = static_cast<int>(detail::as_int(detail::field(j, "c", where), "c"));
  c.new_id = detail::as_string(detail::field(j, "new_id", where), "new_id");
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw SchemaError("covers: expected an array");
    for (const auto& rec : j["covers"]) {
      ComponentSet B = detail::as_subset(detail::field(rec, "B", "covers"), "covers.B");
      if (c.covers.contains(B)) throw SchemaError("covers " + format_subset(B) + ": listed twice");
      c.covers.emplace(B, detail::as_class(detail::field(rec, "classW", "covers"), "covers.classW"));
    }
  }
  return c;
}

// ---- Weight gradings: {"k": 2, "weights": [{"w": 1, "dim": 2}, ...]} or {"k": 2, "hodge": [...]}

inline WeightDims weight_dims_from_json(const json& j) {
  const std::int64_t k = detail::as_int(detail::field(j, "k", "weight grading"), "k");
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw SchemaError("weights: expected an array");
    std::map<std::int64_t, Integer> g;
    for (const auto& rec : j["weights"])
      g[detail::as_int(detail::field(rec, "w", "weights"), "weights.w")] +=
          detail::as_integer(detail::field(rec, "dim", "weights"), "weights.dim");
    return WeightDims::make(k, g);
  }
  if (j.contains("hodge")) return weight_dims(HodgeStructure::unchecked(hodge_table_from_json(j["hodge"])), k);
  throw SchemaError("weight grading: needs 'weights' or 'hodge'");
}

// ---- Germs: {"n": 1, "vanishing": "<poly>"} | {"n": 1, "milnor": "<poly>"} | {"n": 1, "structure": [...]}

/// An isolated hypersurface singularity in n+1 variables, described by one of: the
/// equivariant Hodge-Euler polynomial of its vanishing fibre, the equivariant Hodge
/// number polynomial of the reduced Milnor fibre cohomology, or that cohomology itself.
struct Germ {
  std::int64_t n = 0;
  Poly milnor;  // phn of reduced H^n of the Milnor fibre
  std::optional<EquivariantHodgeStructure> structure;

  /// (-1)^n times the Milnor polynomial.
  Poly vanishing() const { return n % 2 == 0 ? milnor : -milnor; }
};

/// "milnor" and "vanishing" are alternatives; "structure" may accompany either, in
/// which case the polynomials must agree.
inline Germ germ_from_json(const json& j) {
  Germ g;
  g.n = detail::as_int(detail::field(j, "n", "germ"), "n");
  if (g.n < 0) throw SchemaError("n: must be >= 0");
  if (j.contains("milnor") && j.contains("vanishing")) throw SchemaError("germ: 'milnor' and 'vanishing' are exclusive");
  if (!j.contains("milnor") && !j.contains("vanishing") && !j.contains("structure"))
    throw SchemaError("germ: needs one of 'vanishing', 'milnor', 'structure'");
  std::optional<Poly> milnor;
  if (j.contains("milnor")) milnor = detail::as_poly(j["milnor"], "milnor");
  if (j.contains("vanishing")) {
    Poly phi = detail::as_poly(j["vanishing"], "vanishing");
    milnor = g.n % 2 == 0 ? phi : -phi;
  }
  if (j.contains("structure")) {
    EigenPieces pieces = eigen_pieces_from_json(j["structure"]);
    if (auto bad = EquivariantHodgeStructure::check(pieces)) throw SchemaError("structure: " + *bad);
    g.structure = EquivariantHodgeStructure::make(pieces);
    Poly from_structure = equiv_hn_poly(*g.structure);
    if (milnor && *milnor != from_structure) throw SchemaError("germ: 'structure' disagrees with the given polynomial");
    milnor = from_structure;
  }
  g.milnor = *milnor;
  return g;
}

inline json to_json(const Germ& g) {
  json j{{"n", g.n}, {"vanishing", format_poly(g.vanishing())}};
  if (g.structure) j["structure"] = to_json(*g.structure);
  return j;
}

inline json to_json(const SpectrumTable& t) {
  json arr = json::array();
  for (const auto& [k, m] : t.entries())
    arr.push_back({{"alpha", detail::rational_json(k.first)}, {"w", k.second}, {"m", detail::integer_json(m)}});
  return arr;
}

}  // namespace mhc::io
