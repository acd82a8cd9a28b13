#include "hyperfix/cli.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hyperfix/error.hpp"
#include "hyperfix/io.hpp"
#include "hyperfix/poset.hpp"
#include "hyperfix/relsys.hpp"
#include "hyperfix/vspace.hpp"
#include "hyperfix/zigzag.hpp"

namespace hyperfix::cli {

namespace {

using namespace hyperfix::io;

struct Options {
  std::string verb;
  std::string topic;
  std::string input;
  std::string monoid;
  std::string out;
  std::string dot;
  std::string from, to, p, q;
  std::string map, target;
  std::vector<std::string> maps;
  std::vector<std::string> subset;
  std::size_t maxlen = 0;
  std::optional<std::size_t> cap;
  std::uint64_t seed = 1;

  std::size_t cap_or(std::size_t dflt) const { return cap.value_or(dflt); }
};

json options_json(const Options& o) {
  json j;
  j["monoid"] = o.monoid;
  j["maxlen"] = o.maxlen;
  j["cap"] = o.cap ? json(*o.cap) : json(nullptr);
  j["seed"] = o.seed;
  return j;
}

Options options_from_json(const json& j) {
  Options o;
  o.monoid = j.value("monoid", std::string());
  o.maxlen = j.value("maxlen", std::size_t{0});
  if (j.contains("cap") && !j.at("cap").is_null()) o.cap = j.at("cap").get<std::size_t>();
  o.seed = j.value("seed", std::uint64_t{1});
  return o;
}

// ---- value codec ----

json vjson(const TableMonoid& m, Value v) { return m.name(v); }
json vjson(const WordMonoid&, const UpSet& v) { return upset_to_json(v); }

Value vparse(const TableMonoid& m, const json& j) {
  if (!j.is_string()) throw InputError("expected a value name");
  return m.parse(j.get<std::string>());
}
UpSet vparse(const WordMonoid&, const json& j) { return upset_from_json(j); }

std::vector<Value> values_for(const VSpace<TableMonoid>& s, const Options&) { return value_set(s); }
std::vector<UpSet> values_for(const VSpace<WordMonoid>& s, const Options& o) {
  ClosureOptions c;
  c.maxlen = o.maxlen;
  return closed_value_set(s, c);
}

std::size_t name_index(const std::vector<std::string>& names, const json& j) {
  if (!j.is_string()) throw InputError("expected an element name");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == j.get<std::string>()) return i;
  throw InputError("unknown element '" + j.get<std::string>() + "'");
}

// ---- subjects ----

AnySpace space_of(const json& doc, const Options& o) {
  switch (detect_kind(doc)) {
    case InputKind::vspace: return vspace_from_json(doc, o.monoid);
    case InputKind::poset: return poset_to_vspace(poset_from_json(doc));
    case InputKind::digraph: return zigzag_space(digraph_from_json(doc), o.maxlen).space;
    case InputKind::relsys: break;
  }
  throw InputError("this command needs a metric space, poset or digraph, not a relational system");
}

RelSys relsys_of(const json& doc, const Options& o) {
  if (detect_kind(doc) == InputKind::relsys) return relsys_from_json(doc);
  return std::visit([&](const auto& s) { return to_relsys(s, values_for(s, o)); }, space_of(doc, o));
}

std::vector<std::string> elements_of(const json& doc) {
  switch (detect_kind(doc)) {
    case InputKind::digraph: return digraph_from_json(doc).vertices();
    case InputKind::poset: return poset_from_json(doc).elements();
    case InputKind::relsys: return relsys_from_json(doc).elements();
    case InputKind::vspace: break;
  }
  std::vector<std::string> out;
  for (const json& e : doc.at("elements")) out.push_back(e.get<std::string>());
  return out;
}

json base_cert(const Options& o, const json& doc) {
  json c;
  c["command"] = o.verb;
  if (!o.topic.empty()) c["topic"] = o.topic;
  c["input"] = doc;
  c["options"] = options_json(o);
  return c;
}

struct Check {
  bool ok = true;
  std::string where;
  void fail(const std::string& w) {
    if (ok) where = w;
    ok = false;
  }
};

template <class M>
json ball_json(const VSpace<M>& s, const BallRef<typename M::value_type>& b) {
  return {{"center", s.elements()[b.center]}, {"radius", vjson(s.monoid(), b.radius)}};
}

template <class M>
BallRef<typename M::value_type> ball_parse(const VSpace<M>& s, const json& j) {
  return {name_index(s.elements(), j.at("center")), vparse(s.monoid(), j.at("radius"))};
}

// ---- check: axioms ----

// Top as a distance means no zigzag (or no finite value) links the two points.
template <class M>
bool has_top_distance(const VSpace<M>& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s.d(x, y) == s.monoid().top()) return true;
  return false;
}

json run_axioms(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  std::visit(
      [&](const auto& s) {
        const auto rep = check_axioms(s);
        c["verdict"] = rep.ok;
        c["disconnected"] = has_top_distance(s);
        if (!rep.ok) {
          json pts = json::array();
          for (std::size_t x : rep.witness) pts.push_back(s.elements()[x]);
          c["witness"] = {{"axiom", rep.axiom}, {"points", pts}};
        }
      },
      space_of(doc, o));
  return c;
}

void verify_axioms(const json& c, const Options& o, Check& chk) {
  std::visit(
      [&](const auto& s) {
        const auto& m = s.monoid();
        if (c.at("disconnected").get<bool>() != has_top_distance(s)) chk.fail("disconnected: flag is wrong");
        if (c.at("verdict").get<bool>()) {
          if (!check_axioms(s).ok) chk.fail("verdict: the axioms fail");
          return;
        }
        const json& w = c.at("witness");
        std::vector<std::size_t> pts;
        for (const json& e : w.at("points")) pts.push_back(name_index(s.elements(), e));
        const std::string ax = w.at("axiom");
        bool violated = false;
        if (ax == "identity" && pts.size() == 2)
          violated = m.leq(s.d(pts[0], pts[1]), m.zero()) != (pts[0] == pts[1]);
        else if (ax == "involution" && pts.size() == 2)
          violated = !(m.involute(s.d(pts[1], pts[0])) == s.d(pts[0], pts[1]));
        else if (ax == "triangle" && pts.size() == 3)
          violated = !m.leq(s.d(pts[0], pts[1]), m.oplus(s.d(pts[0], pts[2]), s.d(pts[2], pts[1])));
        if (!violated) chk.fail("witness.points: no " + ax + " violation there");
      },
      space_of(c.at("input"), o));
}

// ---- check: hyperconvex ----

json run_hyperconvex(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  std::visit(
      [&](const auto& s) {
        const auto values = values_for(s, o);
        const auto rep = is_hyperconvex(s, values, true);
        c["verdict"] = rep.ok;
        if (!rep.ok) {
          json balls = json::array();
          for (const auto& b : rep.witness) balls.push_back(ball_json(s, b));
          c["witness"] = {{"failure", rep.failure}, {"balls", balls}};
          return;
        }
        // one entry per distinct family of ball supports
        std::set<std::vector<std::uint64_t>> seen;
        json pts = json::array();
        for (const auto& [fam, pt] : rep.points) {
          std::vector<std::uint64_t> key;
          for (const auto& b : fam) key.push_back(ball(s, b.center, b.radius).bits());
          std::sort(key.begin(), key.end());
          if (!seen.insert(key).second) continue;
          json balls = json::array();
          for (const auto& b : fam) balls.push_back(ball_json(s, b));
          pts.push_back({{"balls", balls}, {"point", s.elements()[pt]}});
        }
        c["witness"] = {{"common_points", pts}};
      },
      space_of(doc, o));
  return c;
}

void verify_hyperconvex(const json& c, const Options& o, Check& chk) {
  std::visit(
      [&](const auto& s) {
        const auto& m = s.monoid();
        const json& w = c.at("witness");
        if (c.at("verdict").get<bool>()) {
          std::size_t k = 0;
          for (const json& e : w.at("common_points")) {
            const std::size_t pt = name_index(s.elements(), e.at("point"));
            for (const json& b : e.at("balls")) {
              const auto br = ball_parse(s, b);
              if (!ball(s, br.center, br.radius).contains(pt))
                chk.fail("witness.common_points[" + std::to_string(k) + "]: point outside a ball");
            }
            ++k;
          }
          return;
        }
        std::vector<BallRef<typename std::decay_t<decltype(m)>::value_type>> fam;
        for (const json& b : w.at("balls")) fam.push_back(ball_parse(s, b));
        if (!family_intersection(s, fam).empty()) chk.fail("witness.balls: the balls share a point");
        if (w.at("failure") == "convexity") {
          if (fam.size() != 2 ||
              !m.leq(s.d(fam[0].center, fam[1].center), m.oplus(fam[0].radius, m.involute(fam[1].radius))))
            chk.fail("witness.balls: radii do not satisfy the triangle condition");
        } else {
          for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t k = i + 1; k < fam.size(); ++k)
              if (!ball(s, fam[i].center, fam[i].radius).intersects(ball(s, fam[k].center, fam[k].radius)))
                chk.fail("witness.balls: balls " + std::to_string(i) + " and " + std::to_string(k) + " are disjoint");
        }
      },
      space_of(c.at("input"), o));
}

// ---- check: bounded ----

json run_bounded(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  std::visit(
      [&](const auto& s) {
        const auto& m = s.monoid();
        const auto values = values_for(s, o);
        const auto rep = is_bounded(s, values);
        c["verdict"] = rep.ok;
        const auto delta = diameter(s, s.all());
        json w;
        w["diameter"] = vjson(m, delta);
        if (!rep.ok) {
          w["inaccessible"] = vjson(m, *rep.inaccessible);
        } else {
          auto cands = values;
          cands.push_back(delta);
          std::sort(cands.begin(), cands.end());
          cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
          json acc = json::array();
          for (const auto& v : cands) {
            if (v == m.zero() || !m.leq(v, delta)) continue;
            acc.push_back({{"value", vjson(m, v)}, {"r", vjson(m, *is_accessible(m, v, values))}});
          }
          w["accessible"] = acc;
        }
        c["witness"] = w;
      },
      space_of(doc, o));
  return c;
}

void verify_bounded(const json& c, const Options& o, Check& chk) {
  std::visit(
      [&](const auto& s) {
        const auto& m = s.monoid();
        const auto delta = diameter(s, s.all());
        const json& w = c.at("witness");
        if (c.at("verdict").get<bool>()) {
          std::size_t k = 0;
          for (const json& e : w.at("accessible")) {
            const auto v = vparse(m, e.at("value"));
            const auto r = vparse(m, e.at("r"));
            if (m.leq(v, r) || !m.leq(v, m.oplus(r, m.involute(r))))
              chk.fail("witness.accessible[" + std::to_string(k) + "]: r does not witness accessibility");
            ++k;
          }
          return;
        }
        const auto v = vparse(m, w.at("inaccessible"));
        if (v == m.zero() || !m.leq(v, delta)) chk.fail("witness.inaccessible: not a nonzero value below the diameter");
        if (is_accessible(m, v, values_for(s, o))) chk.fail("witness.inaccessible: the value is accessible");
      },
      space_of(c.at("input"), o));
}

// ---- check: normal ----

json member_json(const RelSys& rs, const BallSetMember& b) {
  json balls = json::array();
  for (auto [x, r] : b.witness) balls.push_back({{"center", rs.elements()[x]}, {"relation", rs.relation(r).name}});
  return {{"support", subset_to_json(b.support, rs.elements())}, {"balls", balls}};
}

Subset member_support_check(const RelSys& rs, const json& j, const std::string& loc, Check& chk) {
  Subset inter = rs.all();
  for (const json& b : j.at("balls"))
    inter &= rs.ball(name_index(rs.elements(), b.at("center")), rs.relation_index(b.at("relation")));
  const Subset sup = subset_from_json(j.at("support"), rs.elements());
  if (!(inter == sup)) chk.fail(loc + ": support differs from the ball intersection");
  return sup;
}

json run_normal(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  const RelSys rs = relsys_of(doc, o);
  const auto rep = rs.has_normal_structure(o.cap_or(RelSys::default_cap));
  c["verdict"] = rep.normal;
  if (!rep.normal) {
    c["witness"] = {{"equally_centered", member_json(rs, *rep.counterexample)}};
  } else {
    json fam = json::array();
    for (const auto& b : rs.enumerate_ball_intersections(o.cap_or(RelSys::default_cap))) fam.push_back(member_json(rs, b));
    c["witness"] = {{"family", fam}};
  }
  return c;
}

void verify_normal(const json& c, const Options& o, Check& chk) {
  const RelSys rs = relsys_of(c.at("input"), o);
  const json& w = c.at("witness");
  if (c.at("verdict").get<bool>()) {
    std::size_t k = 0;
    for (const json& e : w.at("family")) {
      const std::string loc = "witness.family[" + std::to_string(k++) + "]";
      const Subset sup = member_support_check(rs, e, loc, chk);
      if (sup.size() > 1 && rs.is_equally_centered(sup)) chk.fail(loc + ": equally centered");
    }
    return;
  }
  const Subset sup = member_support_check(rs, w.at("equally_centered"), "witness.equally_centered", chk);
  if (sup.size() <= 1 || !rs.is_equally_centered(sup)) chk.fail("witness.equally_centered: not a counterexample");
}

// ---- check: lattice ----

json run_lattice(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  const Poset p = poset_from_json(doc);
  const auto rep = is_complete_lattice(p);
  c["verdict"] = rep.ok;
  const auto& el = p.elements();
  if (!rep.ok) {
    c["witness"] = {{"subset", subset_to_json(*rep.witness, el)}, {"missing", rep.missing}};
    return c;
  }
  json joins = json::object(), meets = json::object();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const Subset xy = Subset::single(x) | Subset::single(y);
      joins[el[x] + "," + el[y]] = el[*p.sup(xy)];
      meets[el[x] + "," + el[y]] = el[*p.inf(xy)];
    }
  c["witness"] = {{"bottom", el[*p.bottom()]}, {"top", el[*p.top()]}, {"joins", joins}, {"meets", meets}};
  return c;
}

void verify_lattice(const json& c, const Options&, Check& chk) {
  const Poset p = poset_from_json(c.at("input"));
  const auto& el = p.elements();
  const json& w = c.at("witness");
  if (!c.at("verdict").get<bool>()) {
    const Subset a = subset_from_json(w.at("subset"), el);
    const bool missing = w.at("missing") == "sup" ? !p.sup(a) : !p.inf(a);
    if (!missing) chk.fail("witness.subset: the bound exists");
    return;
  }
  if (p.size() == 0) chk.fail("input: empty poset");
  const std::size_t bot = name_index(el, w.at("bottom")), top = name_index(el, w.at("top"));
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!p.leq(bot, x) || !p.leq(x, top)) chk.fail("witness.bottom/top: not extremal");
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const std::string key = el[x] + "," + el[y];
      const std::size_t j = name_index(el, w.at("joins").at(key)), m = name_index(el, w.at("meets").at(key));
      if (!p.leq(x, j) || !p.leq(y, j)) chk.fail("witness.joins." + key + ": not an upper bound");
      if (!p.leq(m, x) || !p.leq(m, y)) chk.fail("witness.meets." + key + ": not a lower bound");
      for (std::size_t z = 0; z < p.size(); ++z) {
        if (p.leq(x, z) && p.leq(y, z) && !p.leq(j, z)) chk.fail("witness.joins." + key + ": not least");
        if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, m)) chk.fail("witness.meets." + key + ": not greatest");
      }
    }
}

// ---- check: macneille ----

json run_macneille(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  const Digraph g = digraph_from_json(doc);
  const auto rep = values_in_macneille(g, o.maxlen);
  c["verdict"] = to_string(rep.verdict);
  const ZigzagSpace zs = zigzag_space(g, o.maxlen);
  json d = json::object();
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      d[g.vertices()[x] + "," + g.vertices()[y]] = upset_to_json(zs.space.d(x, y));
  json w = {{"distances", d}, {"complete", zs.complete}};
  if (rep.failing_pair) w["failing_pair"] = {g.vertices()[rep.failing_pair->first], g.vertices()[rep.failing_pair->second]};
  c["witness"] = w;
  return c;
}

void verify_macneille(const json& c, const Options&, Check& chk) {
  const Digraph g = digraph_from_json(c.at("input"));
  const json& w = c.at("witness");
  bool all = true;
  for (auto it = w.at("distances").begin(); it != w.at("distances").end(); ++it) {
    const UpSet u = upset_from_json(it.value());
    if (!in_macneille(u)) all = false;
  }
  const std::string verdict = c.at("verdict");
  if (verdict == "yes" && !all) chk.fail("witness.distances: a value is not a MacNeille element");
  if (verdict == "no") {
    const json& fp = w.at("failing_pair");
    const std::string key = fp.at(0).get<std::string>() + "," + fp.at(1).get<std::string>();
    if (in_macneille(upset_from_json(w.at("distances").at(key)))) chk.fail("witness.failing_pair: value is a MacNeille element");
  }
  // spot-check the listed generators against the graph
  for (auto it = w.at("distances").begin(); it != w.at("distances").end(); ++it) {
    const std::string key = it.key();
    const auto comma = key.find(',');
    const std::size_t x = g.vertex_index(key.substr(0, comma)), y = g.vertex_index(key.substr(comma + 1));
    const UpSet u = upset_from_json(it.value());
    for (const Word& gen : u.generators())
      if (!zz_member(g, x, y, gen)) chk.fail("witness.distances." + key + ": " + display(gen) + " is not realized");
  }
}

// ---- check: olr ----

Subset subset_option(const Options& o, const std::vector<std::string>& el) {
  json arr = json::array();
  for (const auto& s : o.subset) arr.push_back(s);
  return subset_from_json(arr, el);
}

void olr_table_check(const RelSys& rs, Subset a, const std::vector<std::size_t>& r, const std::string& loc, Check& chk) {
  if (r.size() != rs.size()) {
    chk.fail(loc + ": wrong length");
    return;
  }
  for (std::size_t x = 0; x < rs.size(); ++x) {
    if (!a.contains(r[x])) chk.fail(loc + "." + rs.elements()[x] + ": image outside the subset");
    else if (r[r[x]] != r[x]) chk.fail(loc + "." + rs.elements()[x] + ": not idempotent");
    if (a.contains(x) && r[x] != x) chk.fail(loc + "." + rs.elements()[x] + ": moves a point of the subset");
  }
  if (!chk.ok) return;
  for (std::size_t x = 0; x < rs.size(); ++x) {
    if (a.contains(x)) continue;
    const Subset dom = a | Subset::single(x);
    auto img = [&](std::size_t u) { return u == x ? r[x] : u; };
    for (const Relation& rel : rs.relations())
      dom.for_each([&](std::size_t u) {
        dom.for_each([&](std::size_t v) {
          if (rel.contains(u, v) && !rel.contains(img(u), img(v)))
            chk.fail(loc + "." + rs.elements()[x] + ": breaks relation " + rel.name);
        });
      });
  }
}

std::vector<std::size_t> table_parse(const json& j, const std::vector<std::string>& el) {
  std::vector<std::size_t> r;
  for (const std::string& e : el) r.push_back(name_index(el, j.at(e)));
  return r;
}

json table_json(const std::vector<std::size_t>& r, const std::vector<std::string>& el) {
  return map_to_json(r, el, el);
}

json run_olr(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  const RelSys rs = relsys_of(doc, o);
  const Subset a = subset_option(o, rs.elements());
  c["subset"] = subset_to_json(a, rs.elements());
  const auto rep = rs.is_one_local_retract(a);
  c["verdict"] = rep.ok;
  if (rep.ok) c["witness"] = {{"retraction", table_json(rep.retraction, rs.elements())}};
  else c["witness"] = {{"failing_point", rs.elements()[*rep.failing_point]}};
  return c;
}

void verify_olr(const json& c, const Options& o, Check& chk) {
  const RelSys rs = relsys_of(c.at("input"), o);
  const Subset a = subset_from_json(c.at("subset"), rs.elements());
  const json& w = c.at("witness");
  if (c.at("verdict").get<bool>()) {
    olr_table_check(rs, a, table_parse(w.at("retraction"), rs.elements()), "witness.retraction", chk);
    return;
  }
  const std::size_t x = name_index(rs.elements(), w.at("failing_point"));
  if (a.contains(x)) chk.fail("witness.failing_point: inside the subset");
  bool some = false;
  a.for_each([&](std::size_t b) {
    bool ok = true;
    const Subset dom = a | Subset::single(x);
    for (const Relation& rel : rs.relations())
      dom.for_each([&](std::size_t u) {
        dom.for_each([&](std::size_t v) {
          const std::size_t iu = u == x ? b : u, iv = v == x ? b : v;
          if (rel.contains(u, v) && !rel.contains(iu, iv)) ok = false;
        });
      });
    some = some || ok;
  });
  if (some) chk.fail("witness.failing_point: a retraction image exists");
}

// ---- distance ----

json run_distance(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  if (!o.p.empty() || !o.q.empty()) {
    const std::string mon = o.monoid.empty() ? "word-algebra" : o.monoid;
    if (mon == "word-algebra") {
      const UpSet p = UpSet::parse(o.p), q = UpSet::parse(o.q);
      c["p"] = upset_to_json(p);
      c["q"] = upset_to_json(q);
      c["verdict"] = upset_to_json(distance(p, q));
    } else {
      const TableMonoid m = monoid_from_json(json(mon));
      c["p"] = o.p;
      c["q"] = o.q;
      c["verdict"] = m.name(m.distance(m.parse(o.p), m.parse(o.q)));
    }
    c["witness"] = json::object();
    return c;
  }
  const Digraph g = digraph_from_json(doc);
  const std::size_t x = g.vertex_index(o.from), y = g.vertex_index(o.to);
  const auto d = zz_generators(g, x, y, o.maxlen);
  c["from"] = o.from;
  c["to"] = o.to;
  c["verdict"] = upset_to_json(d.value);
  c["witness"] = {{"generators", upset_to_json(d.value)}, {"complete", d.complete}};
  c["disconnected"] = d.complete && d.value.is_top();
  return c;
}

void verify_distance(const json& c, const Options& o, Check& chk) {
  if (c.contains("p")) {
    const std::string mon = o.monoid.empty() ? "word-algebra" : o.monoid;
    if (mon == "word-algebra") {
      // residual by bounded enumeration, independent of the closed form
      const UpSet p = upset_from_json(c.at("p")), q = upset_from_json(c.at("q"));
      const UpSet d = join(involute(left_residual_by_enumeration(p, q)), left_residual_by_enumeration(q, p));
      if (!(d == upset_from_json(c.at("verdict")))) chk.fail("verdict: distance differs");
    } else {
      const TableMonoid m = monoid_from_json(json(mon));
      if (m.name(m.distance(m.parse(c.at("p")), m.parse(c.at("q")))) != c.at("verdict")) chk.fail("verdict: distance differs");
    }
    return;
  }
  const Digraph g = digraph_from_json(c.at("input"));
  const std::size_t x = g.vertex_index(c.at("from")), y = g.vertex_index(c.at("to"));
  const UpSet u = upset_from_json(c.at("witness").at("generators"));
  std::size_t k = 0;
  for (const Word& w : u.generators()) {
    const std::string loc = "witness.generators[" + std::to_string(k++) + "]";
    if (!zz_member(g, x, y, w)) chk.fail(loc + ": not realized by a zigzag homomorphism");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Word shorter(w.str().substr(0, i) + w.str().substr(i + 1));
      if (zz_member(g, x, y, shorter)) chk.fail(loc + ": not minimal");
    }
  }
  if (!(u == upset_from_json(c.at("verdict")))) chk.fail("verdict: differs from the generators");
  Subset comp = Subset::single(x);
  for (Subset prev; prev != comp;) {
    prev = comp;
    comp = step(g, comp, '+') | step(g, comp, '-');
  }
  if (c.at("disconnected").get<bool>() != !comp.contains(y)) chk.fail("disconnected: flag is wrong");
}

// ---- fixpoint ----

std::vector<SelfMap> load_maps(const Options& o, const json& doc, const std::vector<std::string>& el, json& maps_out) {
  std::vector<json> raw;
  if (doc.contains("maps")) {
    if (!doc.at("maps").is_array()) throw InputError("field 'maps' must be an array");
    for (const json& m : doc.at("maps")) raw.push_back(m);
  }
  for (const std::string& path : o.maps) raw.push_back(read_json_file(path));
  std::vector<SelfMap> fs;
  maps_out = json::array();
  for (const json& m : raw) {
    fs.push_back(map_from_json(m, el));
    maps_out.push_back(table_json(fs.back().image, el));
  }
  if (fs.empty()) throw InputError("fixpoint needs at least one map (--maps or a 'maps' field)");
  return fs;
}

json run_fixpoint(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  const InputKind kind = detect_kind(doc);
  const auto el = elements_of(doc);
  json maps;
  const auto fs = load_maps(o, doc, el, maps);
  c["maps"] = maps;
  const RelSys rs = relsys_of(doc, o);
  Subset fixed;
  std::size_t point = 0;
  std::string route;
  if (kind == InputKind::poset && is_complete_lattice(poset_from_json(doc)).ok) {
    const auto t = tarski_common_fixed_points(poset_from_json(doc), fs);
    fixed = t.fixed;
    point = t.least;
    route = "tarski";
  } else if (kind == InputKind::digraph) {
    const auto z = zigzag_fixed_point_demo_direct(digraph_from_json(doc), fs);
    fixed = z.fixed;
    point = z.witness;
    route = "zigzag";
  } else {
    const auto r = rs.common_fixed_points(fs, o.cap_or(RelSys::default_cap));
    fixed = r.fixed;
    point = r.witness;
    route = "relational";
  }
  c["verdict"] = !fixed.empty();
  json w = {{"fixed", subset_to_json(fixed, el)}, {"point", el[point]}, {"route", route}};
  const auto olr = rs.is_one_local_retract(fixed);
  if (olr.ok) w["retraction"] = table_json(olr.retraction, el);
  c["witness"] = w;
  return c;
}

void verify_fixpoint(const json& c, const Options& o, Check& chk) {
  const json& doc = c.at("input");
  const auto el = elements_of(doc);
  std::vector<SelfMap> fs;
  for (const json& m : c.at("maps")) fs.push_back(map_from_json(m, el));
  const json& w = c.at("witness");
  const Subset fixed = subset_from_json(w.at("fixed"), el);
  const std::size_t pt = name_index(el, w.at("point"));
  if (!fixed.contains(pt)) chk.fail("witness.point: not in the fixed set");
  for (std::size_t x = 0; x < el.size(); ++x) {
    bool common = true;
    for (const SelfMap& f : fs) common = common && f(x) == x;
    if (common != fixed.contains(x))
      chk.fail("witness.fixed." + el[x] + (common ? ": common fixed point missing" : ": moved by a map"));
  }
  if (c.at("verdict").get<bool>() == fixed.empty()) chk.fail("verdict: inconsistent with the fixed set");
  if (w.contains("retraction"))
    olr_table_check(relsys_of(doc, o), fixed, table_parse(w.at("retraction"), el), "witness.retraction", chk);
}

// ---- embed ----

json run_embed(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  if (detect_kind(doc) == InputKind::digraph) {
    const Digraph g = digraph_from_json(doc);
    const auto e = embed_into_zigzag_product(g, o.cap_or(4096));
    json factors = json::array(), coords = json::object();
    for (const Word& u : e.factors) factors.push_back(u.str());
    for (std::size_t v = 0; v < g.size(); ++v) coords[g.vertices()[v]] = e.coords[v];
    c["verdict"] = e.verified;
    c["witness"] = {{"factors", factors}, {"coords", coords}};
    if (e.caveat) c["witness"]["caveat"] = *e.caveat;
    return c;
  }
  std::visit(
      [&](const auto& s) {
        const auto img = canonical_embedding(s);
        json coords = json::object();
        for (std::size_t x = 0; x < s.size(); ++x) {
          json row = json::array();
          for (const auto& v : img[x]) row.push_back(vjson(s.monoid(), v));
          coords[s.elements()[x]] = row;
        }
        c["verdict"] = true;
        c["witness"] = {{"coords", coords}};
      },
      space_of(doc, o));
  return c;
}

void verify_embed(const json& c, const Options& o, Check& chk) {
  const json& doc = c.at("input");
  const json& w = c.at("witness");
  if (detect_kind(doc) == InputKind::digraph) {
    const Digraph g = digraph_from_json(doc);
    std::vector<Word> factors;
    for (const json& u : w.at("factors")) factors.emplace_back(u.get<std::string>());
    std::vector<std::vector<std::size_t>> coords;
    for (const std::string& v : g.vertices()) coords.push_back(w.at("coords").at(v).get<std::vector<std::size_t>>());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const Digraph lu = zigzag_from_word(factors[k]);
      for (auto [x, y] : g.arcs())
        if (coords[x].at(k) >= lu.size() || coords[y].at(k) >= lu.size() || !lu.arc(coords[x][k], coords[y][k]))
          chk.fail("witness.coords: factor " + std::to_string(k) + " does not preserve arc (" + g.vertices()[x] + "," +
                   g.vertices()[y] + ")");
    }
    if (!chk.ok || !c.at("verdict").get<bool>()) return;
    const auto zs = zigzag_space(g, o.maxlen);
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y) {
        UpSet sup = UpSet::zero();
        for (std::size_t k = 0; k < factors.size(); ++k) sup = join(sup, zigzag_distance(factors[k], coords[x][k], coords[y][k]));
        if (!(sup == zs.space.d(x, y)))
          chk.fail("witness.coords: distance not preserved at (" + g.vertices()[x] + "," + g.vertices()[y] + ")");
      }
    return;
  }
  std::visit(
      [&](const auto& s) {
        const auto& m = s.monoid();
        std::vector<std::vector<typename std::decay_t<decltype(m)>::value_type>> img;
        for (const std::string& x : s.elements()) {
          img.emplace_back();
          for (const json& v : w.at("coords").at(x)) img.back().push_back(vparse(m, v));
        }
        for (std::size_t x = 0; x < s.size(); ++x)
          for (std::size_t y = 0; y < s.size(); ++y) {
            auto sup = m.zero();
            for (std::size_t z = 0; z < img[x].size() && z < img[y].size(); ++z) sup = m.join(sup, m.distance(img[x][z], img[y][z]));
            if (!(sup == s.d(x, y)))
              chk.fail("witness.coords: distance not preserved at (" + s.elements()[x] + "," + s.elements()[y] + ")");
          }
      },
      space_of(doc, o));
}

// ---- gaps ----

json run_gaps(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  const Poset p = poset_from_json(doc);
  const auto& el = p.elements();
  json gaps = json::array();
  for (const Gap& g : find_gaps(p, o.cap_or(8))) {
    const Gap sub = *finite_subgap(p, g);
    json hole = json::object();
    const auto h = hole_from_gap(p, g);
    const TableMonoid v4 = TableMonoid::v4();
    for (std::size_t x = 0; x < p.size(); ++x) hole[el[x]] = v4.name(h[x]);
    gaps.push_back({{"a", subset_to_json(g.a, el)},
                    {"b", subset_to_json(g.b, el)},
                    {"finite_subgap", {{"a", subset_to_json(sub.a, el)}, {"b", subset_to_json(sub.b, el)}}},
                    {"hole", hole}});
  }
  c["verdict"] = gaps.empty();
  c["witness"] = {{"gaps", gaps}};
  return c;
}

void verify_gaps(const json& c, const Options&, Check& chk) {
  const Poset p = poset_from_json(c.at("input"));
  const auto& el = p.elements();
  const auto space = poset_to_vspace(p);
  std::size_t k = 0;
  for (const json& e : c.at("witness").at("gaps")) {
    const std::string loc = "witness.gaps[" + std::to_string(k++) + "]";
    const Gap g{subset_from_json(e.at("a"), el), subset_from_json(e.at("b"), el)};
    const Gap s{subset_from_json(e.at("finite_subgap").at("a"), el), subset_from_json(e.at("finite_subgap").at("b"), el)};
    if (!is_gap(p, g)) chk.fail(loc + ": not a gap");
    if (!is_gap(p, s) || !s.a.subset_of(g.a) || !s.b.subset_of(g.b)) chk.fail(loc + ".finite_subgap: not a subgap");
    std::vector<Value> h;
    for (const std::string& x : el) h.push_back(space.monoid().parse(e.at("hole").at(x)));
    if (!is_hole(space, h)) chk.fail(loc + ".hole: balls meet");
  }
  if (c.at("verdict").get<bool>() != c.at("witness").at("gaps").empty()) chk.fail("verdict: inconsistent with the gap list");
}

// ---- holes ----

json run_holes(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  if (!o.map.empty() || !o.target.empty()) {
    if (o.map.empty() || o.target.empty()) throw InputError("holes needs both --map and --target");
    const json tdoc = read_json_file(o.target);
    c["target"] = tdoc;
    const AnySpace src = space_of(doc, o), tgt = space_of(tdoc, o);
    if (src.index() != tgt.index()) throw InputError("source and target use different value monoids");
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          const S& t = std::get<S>(tgt);
          VMap f;
          const json mj = read_json_file(o.map);
          const json& mm = mj.contains("map") ? mj.at("map") : mj;
          for (const std::string& x : s.elements()) {
            if (!mm.contains(x)) throw InputError("map is not defined at '" + x + "'");
            f.push_back(name_index(t.elements(), mm.at(x)));
          }
          c["map"] = map_to_json(f, s.elements(), t.elements());
          const auto values = values_for(s, o);
          const auto rep = is_hole_preserving(s, t, f, values, o.cap_or(1u << 20));
          const bool by_retract = hole_preserving_by_retract(s, t, f);
          c["verdict"] = rep.ok;
          json w = {{"isometry_and_retract", by_retract}};
          if (rep.counterexample) {
            json h = json::object();
            for (std::size_t x = 0; x < s.size(); ++x) h[s.elements()[x]] = vjson(s.monoid(), (*rep.counterexample)[x]);
            w["hole"] = h;
          }
          c["witness"] = w;
        },
        src);
    return c;
  }
  std::visit(
      [&](const auto& s) {
        const auto& m = s.monoid();
        const auto rs = replete_space(s, values_for(s, o), o.cap_or(1u << 16));
        json forms = json::array(), emb = json::object();
        for (const auto& h : rs.forms) {
          json f = json::object();
          for (std::size_t x = 0; x < s.size(); ++x) f[s.elements()[x]] = vjson(m, h[x]);
          forms.push_back(f);
        }
        for (std::size_t x = 0; x < s.size(); ++x) emb[s.elements()[x]] = rs.embedding[x];
        c["verdict"] = rs.forms.size();
        c["witness"] = {{"forms", forms}, {"embedding", emb}};
      },
      space_of(doc, o));
  return c;
}

void verify_holes(const json& c, const Options& o, Check& chk) {
  const json& doc = c.at("input");
  const json& w = c.at("witness");
  if (c.contains("target")) {
    const AnySpace src = space_of(doc, o), tgt = space_of(c.at("target"), o);
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          const S& t = std::get<S>(tgt);
          VMap f;
          for (const std::string& x : s.elements()) f.push_back(name_index(t.elements(), c.at("map").at(x)));
          if (hole_preserving_by_retract(s, t, f) != w.at("isometry_and_retract").get<bool>())
            chk.fail("witness.isometry_and_retract: differs");
          if (w.contains("hole")) {
            std::vector<typename S::V> h;
            for (const std::string& x : s.elements()) h.push_back(vparse(s.monoid(), w.at("hole").at(x)));
            if (!is_hole(s, h)) chk.fail("witness.hole: not a hole of the source");
            if (is_hole(t, hole_image(t, f, h))) chk.fail("witness.hole: its image is a hole");
            if (c.at("verdict").get<bool>()) chk.fail("verdict: a counterexample is listed");
          }
        },
        src);
    return;
  }
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        std::vector<std::vector<typename S::V>> forms;
        std::size_t k = 0;
        for (const json& f : w.at("forms")) {
          forms.emplace_back();
          for (const std::string& x : s.elements()) forms.back().push_back(vparse(s.monoid(), f.at(x)));
          const std::string loc = "witness.forms[" + std::to_string(k++) + "]";
          if (!is_metric_form(s, forms.back())) chk.fail(loc + ": not a metric form");
          if (is_hole(s, forms.back())) chk.fail(loc + ": balls do not meet");
        }
        for (std::size_t x = 0; x < s.size(); ++x) {
          const std::size_t i = w.at("embedding").at(s.elements()[x]);
          if (i >= forms.size()) {
            chk.fail("witness.embedding." + s.elements()[x] + ": index out of range");
            continue;
          }
          for (std::size_t y = 0; y < s.size(); ++y)
            if (!(forms[i][y] == s.d(y, x))) chk.fail("witness.embedding." + s.elements()[x] + ": not the distance column");
        }
      },
      space_of(doc, o));
}

// ---- demos ----

bool has_retraction_onto(const VSpace<TableMonoid>& s, Subset a) {
  const auto outside = s.all().minus(a).elements();
  const auto inside = a.elements();
  std::vector<std::size_t> digit(outside.size(), 0);
  while (true) {
    VMap r(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) r[x] = x;
    for (std::size_t i = 0; i < outside.size(); ++i) r[outside[i]] = inside[digit[i]];
    if (is_nonexpansive(s, s, r)) return true;
    std::size_t i = 0;
    for (; i < outside.size() && ++digit[i] == inside.size(); ++i) digit[i] = 0;
    if (i == outside.size()) return false;
  }
}

json run_demo(const Options& o, const json& doc) {
  json c = base_cert(o, doc);
  if (o.topic == "compact-normal-posets") {
    const std::size_t n = o.maxlen ? o.maxlen : 4;
    if (n > 5) throw CapExceeded("compact-normal-posets enumerates at most 5 points");
    json list = json::array();
    std::size_t normal = 0, total = 0;
    for (std::size_t k = 1; k <= n; ++k)
      for (const Poset& p : enumerate_posets(k, true)) {
        const RelSys rs = p.relsys();
        const auto rep = rs.has_normal_structure(o.cap_or(RelSys::default_cap));
        json e = {{"poset", poset_to_json(p)}, {"normal", rep.normal}, {"lattice", is_complete_lattice(p).ok}};
        if (!rep.normal) e["equally_centered"] = member_json(rs, *rep.counterexample);
        normal += rep.normal;
        ++total;
        list.push_back(e);
      }
    c["verdict"] = {{"posets", total}, {"normal", normal}};
    c["witness"] = {{"posets", list}};
    return c;
  }
  if (o.topic == "olr-vs-retract") {
    std::mt19937_64 rng(o.seed);
    const auto all = enumerate_posets(4, false);
    json examples = json::array();
    std::size_t olr = 0, retract = 0, subsets = 0;
    const std::size_t samples = o.cap_or(24);
    for (std::size_t i = 0; i < samples; ++i) {
      const Poset& p = all[rng() % all.size()];
      const auto s = poset_to_vspace(p);
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s.size()); ++bits) {
        const Subset a(bits);
        const auto rep = one_local_retract_metric(s, a);
        const bool ret = has_retraction_onto(s, a);
        ++subsets;
        olr += rep.ok;
        retract += ret;
        if (rep.ok != ret)
          examples.push_back({{"poset", poset_to_json(p)},
                              {"subset", subset_to_json(a, s.elements())},
                              {"one_local_retract", rep.ok},
                              {"retract", ret}});
      }
    }
    c["verdict"] = {{"subsets", subsets}, {"one_local_retracts", olr}, {"retracts", retract}};
    c["witness"] = {{"disagreements", examples}};
    return c;
  }
  throw InputError("unknown demo '" + o.topic + "' (compact-normal-posets, olr-vs-retract)");
}

void verify_demo(const json& c, const Options& o, Check& chk) {
  const std::string topic = c.at("topic");
  if (topic == "compact-normal-posets") {
    std::size_t k = 0;
    for (const json& e : c.at("witness").at("posets")) {
      const std::string loc = "witness.posets[" + std::to_string(k++) + "]";
      const Poset p = poset_from_json(e.at("poset"));
      const RelSys rs = p.relsys();
      if (is_complete_lattice(p).ok != e.at("lattice").get<bool>()) chk.fail(loc + ".lattice: differs");
      if (e.at("normal").get<bool>()) {
        if (!rs.has_normal_structure(o.cap_or(RelSys::default_cap)).normal) chk.fail(loc + ".normal: not normal");
      } else {
        const Subset sup = member_support_check(rs, e.at("equally_centered"), loc + ".equally_centered", chk);
        if (sup.size() <= 1 || !rs.is_equally_centered(sup)) chk.fail(loc + ".equally_centered: not a counterexample");
      }
    }
    return;
  }
  std::size_t k = 0;
  for (const json& e : c.at("witness").at("disagreements")) {
    const std::string loc = "witness.disagreements[" + std::to_string(k++) + "]";
    const auto s = poset_to_vspace(poset_from_json(e.at("poset")));
    const Subset a = subset_from_json(e.at("subset"), s.elements());
    if (one_local_retract_metric(s, a).ok != e.at("one_local_retract").get<bool>()) chk.fail(loc + ": olr verdict differs");
    if (has_retraction_onto(s, a) != e.at("retract").get<bool>()) chk.fail(loc + ": retract verdict differs");
  }
}

// ---- dispatch ----

using Runner = json (*)(const Options&, const json&);
using Verifier = void (*)(const json&, const Options&, Check&);

struct Handler {
  Runner run;
  Verifier verify;
};

Handler handler_for(const std::string& verb, const std::string& topic) {
  if (verb == "check") {
    if (topic == "axioms") return {run_axioms, verify_axioms};
    if (topic == "hyperconvex") return {run_hyperconvex, verify_hyperconvex};
    if (topic == "bounded") return {run_bounded, verify_bounded};
    if (topic == "normal") return {run_normal, verify_normal};
    if (topic == "lattice") return {run_lattice, verify_lattice};
    if (topic == "macneille") return {run_macneille, verify_macneille};
    if (topic == "olr") return {run_olr, verify_olr};
    throw InputError("unknown property '" + topic + "' (axioms, hyperconvex, bounded, normal, lattice, macneille, olr)");
  }
  if (verb == "distance") return {run_distance, verify_distance};
  if (verb == "fixpoint") return {run_fixpoint, verify_fixpoint};
  if (verb == "embed") return {run_embed, verify_embed};
  if (verb == "gaps") return {run_gaps, verify_gaps};
  if (verb == "holes") return {run_holes, verify_holes};
  if (verb == "demo") return {run_demo, verify_demo};
  throw InputError("unknown command '" + verb + "'");
}

json run_verify(const Options& o) {
  const json cert = read_json_file(o.input);
  Check chk;
  try {
    const std::string verb = cert.at("command");
    const Options co = options_from_json(cert.at("options"));
    handler_for(verb, cert.value("topic", std::string())).verify(cert, co, chk);
  } catch (const json::exception& e) {
    chk.fail(std::string("schema: ") + e.what());
  } catch (const Error& e) {
    chk.fail(std::string("certificate: ") + e.what());
  }
  json r = {{"command", "verify"}, {"valid", chk.ok}};
  if (!chk.ok) r["location"] = chk.where;
  return r;
}

void write_dot(const Options& o, const json& doc) {
  std::string text;
  switch (detect_kind(doc)) {
    case InputKind::digraph: text = to_dot(digraph_from_json(doc)); break;
    case InputKind::poset: {
      const Poset p = poset_from_json(doc);
      text = to_dot(Digraph::from_arcs(p.elements(), p.covers(), false), "P");
      break;
    }
    default: throw InputError("--dot needs a digraph or poset input");
  }
  std::ofstream f(o.dot);
  if (!f) throw InputError("cannot write " + o.dot);
  f << text;
}

json dispatch(const Options& o) {
  if (o.verb == "verify") return run_verify(o);
  json doc = json::object();
  if (!o.input.empty()) doc = read_json_file(o.input);
  const bool needs_input = !(o.verb == "demo" || (o.verb == "distance" && (!o.p.empty() || !o.q.empty())));
  if (needs_input && o.input.empty()) throw InputError(o.verb + " needs --input");
  const Handler h = handler_for(o.verb, o.topic);
  json cert;
  try {
    cert = h.run(o, doc);
  } catch (const json::exception& e) {
    throw InputError(std::string("input: ") + e.what());
  }
  if (!o.dot.empty()) write_dot(o, doc);
  return cert;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points and geometry of finite generalized metric spaces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,--graph", o.input, "input JSON file");
    sub->add_option("--monoid", o.monoid, "value monoid override (V4 or word-algebra)");
    sub->add_option("--maxlen", o.maxlen, "word length bound (0 = exact)");
    sub->add_option("--cap", o.cap, "enumeration cap for the main search");
    sub->add_option("--seed", o.seed, "seed for randomized corpora");
    sub->add_option("--out", o.out, "write the certificate here instead of stdout");
    sub->add_option("--dot", o.dot, "write a DOT rendering of the input graph or poset");
  };

  auto* check = app.add_subcommand("check", "test a property and emit a certificate");
  check->add_option("property", o.topic, "axioms | hyperconvex | bounded | normal | lattice | macneille | olr")->required();
  check->add_option("--subset", o.subset, "subset for the olr property")->delimiter(',');
  common(check);
  auto* dist = app.add_subcommand("distance", "zigzag distance between vertices, or d_V between values");
  dist->add_option("--from", o.from);
  dist->add_option("--to", o.to);
  dist->add_option("--p", o.p, "first value");
  dist->add_option("--q", o.q, "second value");
  common(dist);
  auto* fix = app.add_subcommand("fixpoint", "common fixed points of commuting maps");
  fix->add_option("--maps", o.maps, "map files")->expected(1, -1);
  common(fix);
  common(app.add_subcommand("embed", "isometric embedding certificate"));
  common(app.add_subcommand("gaps", "gaps of a poset with finite subgaps and holes"));
  auto* holes = app.add_subcommand("holes", "replete space, or hole preservation of a map");
  holes->add_option("--map", o.map, "map file");
  holes->add_option("--target", o.target, "target space file");
  common(holes);
  auto* demo = app.add_subcommand("demo", "built-in experiments");
  demo->add_option("name", o.topic, "compact-normal-posets | olr-vs-retract")->required();
  common(demo);
  common(app.add_subcommand("verify", "re-check a certificate"));

  std::vector<std::string> argv_store{"hyperfix"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << json({{"error", "input"}, {"message", e.what()}}).dump() << "\n";
    return 2;
  }
  o.verb = app.get_subcommands().front()->get_name();

  try {
    const json cert = dispatch(o);
    const std::string text = cert.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw InputError("cannot write " + o.out);
      f << text;
    }
    return 0;
  } catch (const Error& e) {
    static const char* kinds[] = {"input", "cap_exceeded", "hypothesis", "structure", "internal"};
    err << json({{"error", kinds[static_cast<int>(e.kind())]}, {"message", e.what()}}).dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << json({{"error", "internal"}, {"message", e.what()}}).dump() << "\n";
    return 1;
  }
}

}  // namespace hyperfix::cli
