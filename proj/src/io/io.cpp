#include "hyperfix/io.hpp"

#include <fstream>
#include <sstream>

#include "hyperfix/error.hpp"

namespace hyperfix::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> names_field(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) throw InputError(std::string("field '") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const json& e : arr) {
    if (!e.is_string()) throw InputError(std::string("field '") + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (out[i] == out[k]) throw InputError(std::string("field '") + key + "' repeats " + out[i]);
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const json& e, const std::string& where) {
  if (!e.is_string()) throw InputError(where + ": expected an element name");
  const std::string s = e.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return i;
  throw InputError(where + ": unknown element '" + s + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_field(const json& arr, const std::vector<std::string>& names,
                                                             const std::string& where) {
  if (!arr.is_array()) throw InputError(where + " must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const json& p : arr) {
    if (!p.is_array() || p.size() != 2) throw InputError(where + " must contain 2-element arrays");
    out.emplace_back(index_of(names, p[0], where), index_of(names, p[1], where));
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

UpSet upset_from_json(const json& j) {
  if (j.is_string()) return UpSet::parse(j.get<std::string>());
  if (!j.is_array()) throw InputError("an up-set is an array of generator words or a string");
  std::vector<Word> gens;
  for (const json& w : j) {
    if (!w.is_string()) throw InputError("generator words must be strings");
    gens.emplace_back(w.get<std::string>());
  }
  return UpSet::from_generators(std::move(gens));
}

json upset_to_json(const UpSet& u) {
  json arr = json::array();
  for (const Word& g : u.generators()) arr.push_back(g.str());
  return arr;
}

TableMonoid monoid_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "V4") return TableMonoid::v4();
    throw InputError("unknown finite monoid '" + j.get<std::string>() + "'");
  }
  const auto names = names_field(j, "values");
  const json& op = field(j, "oplus");
  if (!op.is_array() || op.size() != names.size()) throw InputError("field 'oplus' must be a square table");
  std::vector<std::vector<std::size_t>> table;
  for (const json& row : op) {
    if (!row.is_array() || row.size() != names.size()) throw InputError("field 'oplus' must be a square table");
    std::vector<std::size_t> r;
    for (const json& e : row) r.push_back(index_of(names, e, "oplus"));
    table.push_back(std::move(r));
  }
  const json& inv = field(j, "involution");
  std::vector<std::size_t> involution(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!inv.contains(names[i])) throw InputError("field 'involution' lacks value " + names[i]);
    involution[i] = index_of(names, inv.at(names[i]), "involution");
  }
  const auto order = pairs_field(field(j, "leq"), names, "leq");
  const std::string id = j.value("id", std::string("inline"));
  TableMonoid m(id, names, table, involution, order);
  const auto problems = m.validate();
  if (!problems.empty()) throw InputError("monoid " + id + ": " + problems.front());
  return m;
}

json monoid_to_json(const TableMonoid& m) {
  if (m.id() == "V4") return "V4";
  json j;
  j["id"] = m.id();
  json names = json::array(), op = json::array(), inv = json::object(), le = json::array();
  for (Value a : m.carrier()) {
    names.push_back(m.name(a));
    json row = json::array();
    for (Value b : m.carrier()) {
      row.push_back(m.name(m.oplus(a, b)));
      if (a != b && m.leq(a, b)) le.push_back({m.name(a), m.name(b)});
    }
    op.push_back(row);
    inv[m.name(a)] = m.name(m.involute(a));
  }
  j["values"] = names;
  j["oplus"] = op;
  j["involution"] = inv;
  j["leq"] = le;
  return j;
}

AnySpace vspace_from_json(const json& j, const std::string& monoid_override) {
  const auto names = names_field(j, "elements");
  const json& dist = field(j, "distance");
  if (!dist.is_object()) throw InputError("field 'distance' must map \"x,y\" to values");
  json mon = monoid_override.empty() ? j.value("monoid", json("V4")) : json(monoid_override);
  auto lookup = [&](std::size_t x, std::size_t y) -> const json* {
    const std::string key = names[x] + "," + names[y];
    if (dist.contains(key)) return &dist.at(key);
    return nullptr;
  };
  if (mon.is_string() && mon.get<std::string>() == "word-algebra") {
    std::vector<UpSet> d;
    for (std::size_t x = 0; x < names.size(); ++x)
      for (std::size_t y = 0; y < names.size(); ++y) {
        const json* v = lookup(x, y);
        if (!v && x == y) {
          d.push_back(UpSet::zero());
          continue;
        }
        if (!v) throw InputError("field 'distance' lacks \"" + names[x] + "," + names[y] + "\"");
        d.push_back(upset_from_json(*v));
      }
    return VSpace<WordMonoid>(names, WordMonoid{}, std::move(d));
  }
  TableMonoid m = monoid_from_json(mon);
  std::vector<Value> d;
  for (std::size_t x = 0; x < names.size(); ++x)
    for (std::size_t y = 0; y < names.size(); ++y) {
      const json* v = lookup(x, y);
      if (!v && x == y) {
        d.push_back(m.zero());
        continue;
      }
      if (!v) throw InputError("field 'distance' lacks \"" + names[x] + "," + names[y] + "\"");
      if (!v->is_string()) throw InputError("distance values must be strings");
      d.push_back(m.parse(v->get<std::string>()));
    }
  return VSpace<TableMonoid>(names, std::move(m), std::move(d));
}

json vspace_to_json(const VSpace<TableMonoid>& s) {
  json j;
  j["elements"] = s.elements();
  j["monoid"] = monoid_to_json(s.monoid());
  json d = json::object();
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) d[s.elements()[x] + "," + s.elements()[y]] = s.monoid().name(s.d(x, y));
  j["distance"] = d;
  return j;
}

json vspace_to_json(const VSpace<WordMonoid>& s) {
  json j;
  j["elements"] = s.elements();
  j["monoid"] = "word-algebra";
  json d = json::object();
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) d[s.elements()[x] + "," + s.elements()[y]] = upset_to_json(s.d(x, y));
  j["distance"] = d;
  return j;
}

Poset poset_from_json(const json& j) {
  auto names = names_field(j, "elements");
  const auto covers = pairs_field(field(j, "covers"), names, "covers");
  return Poset::from_covers(std::move(names), covers);
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.elements();
  json c = json::array();
  for (auto [a, b] : p.covers()) c.push_back({p.elements()[a], p.elements()[b]});
  j["covers"] = c;
  return j;
}

Digraph digraph_from_json(const json& j) {
  auto names = names_field(j, "vertices");
  const auto arcs = pairs_field(field(j, "arcs"), names, "arcs");
  const json& loops = j.value("add_loops", json(false));
  if (!loops.is_boolean()) throw InputError("field 'add_loops' must be a boolean");
  return Digraph::from_arcs(std::move(names), arcs, loops.get<bool>());
}

json digraph_to_json(const Digraph& g) {
  json j;
  j["vertices"] = g.vertices();
  json a = json::array();
  for (auto [x, y] : g.arcs()) a.push_back({g.vertices()[x], g.vertices()[y]});
  j["arcs"] = a;
  j["add_loops"] = false;
  return j;
}

RelSys relsys_from_json(const json& j) {
  auto names = names_field(j, "elements");
  const json& rels = field(j, "relations");
  if (!rels.is_object()) throw InputError("field 'relations' must map names to pair arrays");
  std::vector<std::pair<std::string, std::vector<std::pair<std::size_t, std::size_t>>>> out;
  for (auto it = rels.begin(); it != rels.end(); ++it)
    out.emplace_back(it.key(), pairs_field(it.value(), names, "relation " + it.key()));
  return RelSys::from_pairs(std::move(names), out);
}

json relsys_to_json(const RelSys& r) {
  json j;
  j["elements"] = r.elements();
  json rels = json::object();
  for (const Relation& rel : r.relations()) {
    json pairs = json::array();
    for (std::size_t x = 0; x < r.size(); ++x)
      rel.rows[x].for_each([&](std::size_t y) { pairs.push_back({r.elements()[x], r.elements()[y]}); });
    rels[rel.name] = pairs;
  }
  j["relations"] = rels;
  return j;
}

SelfMap map_from_json(const json& j, const std::vector<std::string>& elements) {
  const json& m = j.is_object() && j.contains("map") ? j.at("map") : j;
  if (!m.is_object()) throw InputError("a map is an object from element names to element names");
  SelfMap f;
  for (const std::string& e : elements) {
    if (!m.contains(e)) throw InputError("map is not defined at '" + e + "'");
    f.image.push_back(index_of(elements, m.at(e), "map value at " + e));
  }
  if (m.size() != elements.size()) throw InputError("map mentions elements outside the carrier");
  return f;
}

json map_to_json(const VMap& f, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  json j = json::object();
  for (std::size_t x = 0; x < f.size(); ++x) j[from[x]] = to[f[x]];
  return j;
}

Subset subset_from_json(const json& j, const std::vector<std::string>& elements) {
  if (!j.is_array()) throw InputError("a subset is an array of element names");
  Subset s;
  for (const json& e : j) s.insert(index_of(elements, e, "subset"));
  return s;
}

json subset_to_json(Subset a, const std::vector<std::string>& elements) {
  json arr = json::array();
  a.for_each([&](std::size_t x) { arr.push_back(elements[x]); });
  return arr;
}

InputKind detect_kind(const json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (j.contains("distance")) return InputKind::vspace;
  if (j.contains("covers")) return InputKind::poset;
  if (j.contains("arcs")) return InputKind::digraph;
  if (j.contains("relations")) return InputKind::relsys;
  throw InputError("cannot tell the input kind: expected a 'distance', 'covers', 'arcs' or 'relations' field");
}

}  // namespace hyperfix::io
