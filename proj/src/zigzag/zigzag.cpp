#include "hyperfix/zigzag.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hyperfix/error.hpp"

namespace hyperfix {

Digraph::Digraph(std::vector<std::string> vertices, std::vector<Subset> out)
    : vertices_(std::move(vertices)), out_(std::move(out)) {
  const std::size_t n = vertices_.size();
  if (n > Subset::max_size) throw CapExceeded("digraphs are limited to 64 vertices");
  if (out_.size() != n) throw InputError("adjacency has the wrong number of rows");
  in_.assign(n, Subset());
  for (std::size_t x = 0; x < n; ++x) {
    if (!out_[x].subset_of(Subset::full(n))) throw InputError("arc to an unknown vertex");
    out_[x].for_each([&](std::size_t y) { in_[y].insert(x); });
    if (!out_[x].contains(x)) reflexive_ = false;
  }
}

Digraph Digraph::from_arcs(std::vector<std::string> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                           bool add_loops) {
  std::vector<Subset> out(vertices.size());
  for (auto [x, y] : arcs) {
    if (x >= vertices.size() || y >= vertices.size()) throw InputError("arc endpoint out of range");
    out[x].insert(y);
  }
  if (add_loops)
    for (std::size_t x = 0; x < vertices.size(); ++x) out[x].insert(x);
  return Digraph(std::move(vertices), std::move(out));
}

bool Digraph::oriented() const noexcept {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (arc(x, y) && arc(y, x)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) out_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

std::size_t Digraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw InputError("unknown vertex: " + name);
  return static_cast<std::size_t>(it - vertices_.begin());
}

Digraph zigzag_from_word(const Word& u) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i <= u.size(); ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 0; i < u.size(); ++i)
    arcs.push_back(u[i] == '+' ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i));
  return Digraph::from_arcs(std::move(names), arcs, true);
}

Word word_from_zigzag(const Digraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw StructureError("not a zigzag: no vertices");
  if (!g.reflexive()) throw StructureError("not a zigzag: missing loops");
  if (!g.oriented()) throw StructureError("not a zigzag: opposite arcs");
  std::vector<Subset> nbr(n);
  std::size_t edges = 0;
  for (std::size_t x = 0; x < n; ++x) {
    nbr[x] = (g.out(x) | g.in(x)).minus(Subset::single(x));
    if (nbr[x].size() > 2) throw StructureError("not a zigzag: vertex of degree above 2");
    edges += nbr[x].size();
  }
  if (edges / 2 != n - 1) throw StructureError("not a zigzag: symmetric hull is not a path");
  if (n == 1) return Word();
  std::size_t start = n;
  for (std::size_t x = 0; x < n && start == n; ++x)
    if (nbr[x].size() == 1) start = x;
  if (start == n) throw StructureError("not a zigzag: symmetric hull is a cycle");
  std::string ev;
  Subset visited = Subset::single(start);
  for (std::size_t cur = start; ev.size() < n - 1;) {
    const Subset next = nbr[cur].minus(visited);
    if (next.empty()) throw StructureError("not a zigzag: symmetric hull is disconnected");
    const std::size_t nx = next.first();
    ev += g.arc(cur, nx) ? '+' : '-';
    visited.insert(nx);
    cur = nx;
  }
  const Word w(ev);
  return std::min(w, w.involute());
}

Subset step(const Digraph& g, Subset s, char letter) {
  Subset out;
  s.for_each([&](std::size_t x) { out |= letter == '+' ? g.out(x) : g.in(x); });
  return out;
}

bool zz_member(const Digraph& g, std::size_t x, std::size_t y, const Word& w) {
  if (!g.reflexive()) throw StructureError("zigzag distance needs a reflexive graph");
  Subset s = Subset::single(x);
  for (std::size_t i = 0; i < w.size(); ++i) s = step(g, s, w[i]);
  return s.contains(y);
}

ZzDistance zz_generators(const Digraph& g, std::size_t x, std::size_t y, std::size_t maxlen) {
  if (!g.reflexive()) throw StructureError("zigzag distance needs a reflexive graph");
  const std::size_t bound = g.size() == 0 ? 0 : g.size() - 1;
  const std::size_t limit = maxlen == 0 ? bound : std::min(maxlen, bound);
  // With loops every letter can only enlarge the reachable set; a letter that leaves it unchanged can be
  // deleted, so every minimal word enlarges the set at each letter.
  std::vector<Word> found;
  bool truncated = false;
  std::string cur;
  std::function<void(Subset)> dfs = [&](Subset s) {
    if (s.contains(y)) {
      found.emplace_back(cur);
      return;
    }
    for (char c : {'+', '-'}) {
      const Subset t = step(g, s, c);
      if (t == s) continue;
      if (cur.size() == limit) {
        truncated = true;
        continue;
      }
      cur.push_back(c);
      dfs(t);
      cur.pop_back();
    }
  };
  dfs(Subset::single(x));
  return {UpSet::from_generators(std::move(found)), !truncated};
}

ZigzagSpace zigzag_space(const Digraph& g, std::size_t maxlen) {
  std::vector<UpSet> dist;
  bool complete = true;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      ZzDistance d = zz_generators(g, x, y, maxlen);
      complete = complete && d.complete;
      dist.push_back(std::move(d.value));
    }
  return {VSpace<WordMonoid>(g.vertices(), WordMonoid{}, std::move(dist)), complete};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

bool is_graph_homomorphism(const Digraph& g, const Digraph& h, const VMap& f) {
  if (f.size() != g.size()) return false;
  for (std::size_t y : f)
    if (y >= h.size()) return false;
  for (auto [x, y] : g.arcs())
    if (!h.arc(f[x], f[y])) return false;
  return true;
}

HomCheck graph_hom_iff_nonexpansive_check(const VMap& f, const Digraph& g, const Digraph& h) {
  if (f.size() != g.size()) throw InputError("map is not total on the source graph");
  for (std::size_t y : f)
    if (y >= h.size()) throw InputError("map leaves the target graph");
  HomCheck out;
  out.homomorphism = is_graph_homomorphism(g, h, f);
  out.nonexpansive = true;
  for (std::size_t x = 0; x < g.size() && out.nonexpansive; ++x)
    for (std::size_t y = 0; y < g.size() && out.nonexpansive; ++y) {
      const UpSet d = zz_generators(g, x, y).value;
      for (const Word& w : d.generators())
        if (!zz_member(h, f[x], f[y], w)) {
          out.nonexpansive = false;
          break;
        }
    }
  return out;
}

MacNeilleCheck values_in_macneille(const Digraph& g, std::size_t maxlen) {
  MacNeilleCheck out;
  bool incomplete = false;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      const ZzDistance d = zz_generators(g, x, y, maxlen);
      if (!d.complete) {
        incomplete = true;
        continue;
      }
      if (!in_macneille(d.value)) return {Verdict::no, std::make_pair(x, y)};
    }
  if (incomplete) out.verdict = Verdict::unknown;
  return out;
}

UpSet zigzag_distance(const Word& u, std::size_t i, std::size_t j) {
  if (i <= j) return UpSet::principal(u.substr(i, j - i));
  return UpSet::principal(u.substr(j, i - j).involute());
}

ZigzagEmbedding embed_into_zigzag_product(const Digraph& g, std::size_t factor_cap) {
  const MacNeilleCheck mc = values_in_macneille(g);
  if (mc.verdict != Verdict::yes)
    throw HypothesisViolation("zigzag product embedding",
                              mc.failing_pair ? "distance from " + g.vertices()[mc.failing_pair->first] + " to " +
                                                    g.vertices()[mc.failing_pair->second] +
                                                    " is not a MacNeille element"
                                              : "distances could not be computed completely");
  const std::size_t n = g.size();
  const ZigzagSpace zs = zigzag_space(g);
  const auto& s = zs.space;

  ZigzagEmbedding out;
  out.coords.assign(n, {});
  std::set<std::pair<Word, std::vector<std::size_t>>> seen;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const UpSet& dxy = s.d(x, y);
      if (dxy.is_top()) {
        out.caveat = "vertices " + g.vertices()[x] + " and " + g.vertices()[y] +
                     " are not connected; an isometric embedding needs infinitely many zigzags of unbounded length";
        continue;
      }
      for (const Word& u : lower_cone(dxy.generators())) {
        if (u.empty()) continue;
        std::vector<std::optional<std::size_t>> f(n);
        f[x] = 0;
        f[y] = u.size();
        std::vector<std::size_t> order{x, y};
        for (std::size_t v = 0; v < n; ++v)
          if (v != x && v != y) order.push_back(v);
        for (std::size_t k = 2; k < order.size(); ++k) {
          const std::size_t v = order[k];
          for (std::size_t j = 0; j <= u.size() && !f[v]; ++j) {
            bool ok = true;
            for (std::size_t z = 0; z < n && ok; ++z) {
              if (!f[z]) continue;
              ok = leq(zigzag_distance(u, *f[z], j), s.d(z, v)) && leq(zigzag_distance(u, j, *f[z]), s.d(v, z));
            }
            if (ok) f[v] = j;
          }
          if (!f[v])
            throw InternalError("no nonexpansive extension into the zigzag " + u.str() + " at vertex " +
                                g.vertices()[v]);
        }
        std::vector<std::size_t> col;
        for (auto& c : f) col.push_back(*c);
        if (!seen.emplace(u, col).second) continue;
        if (out.factors.size() == factor_cap)
          throw CapExceeded("zigzag embedding needs more than " + std::to_string(factor_cap) + " factors");
        out.factors.push_back(u);
        for (std::size_t v = 0; v < n; ++v) out.coords[v].push_back(col[v]);
      }
    }

  bool iso = true;
  for (std::size_t x = 0; x < n && iso; ++x)
    for (std::size_t y = 0; y < n && iso; ++y) {
      UpSet sup = UpSet::zero();
      for (std::size_t k = 0; k < out.factors.size(); ++k)
        sup = join(sup, zigzag_distance(out.factors[k], out.coords[x][k], out.coords[y][k]));
      iso = sup == s.d(x, y);
    }
  if (!iso && !out.caveat) throw InternalError("zigzag product embedding is not isometric");
  out.verified = iso && !out.caveat;
  return out;
}

ClaimEmbedding claim_zigzag_embedding(const Word& u) {
  ClaimEmbedding out;
  for (std::size_t i = 0; i <= u.size(); ++i) out.images.push_back(UpSet::principal(u.substr(0, i)));
  out.verified = true;
  for (std::size_t i = 0; i <= u.size(); ++i)
    for (std::size_t j = 0; j <= u.size(); ++j)
      if (!(distance(out.images[i], out.images[j]) == zigzag_distance(u, i, j))) out.verified = false;
  return out;
}

Digraph product(const Digraph& g, const Digraph& h) {
  const std::size_t n = g.size() * h.size();
  if (n > Subset::max_size) throw CapExceeded("product digraph exceeds 64 vertices");
  std::vector<std::string> names;
  std::vector<Subset> out(n);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      names.push_back("(" + g.vertices()[a] + "," + h.vertices()[b] + ")");
      g.out(a).for_each([&](std::size_t c) {
        h.out(b).for_each([&](std::size_t e) { out[a * h.size() + b].insert(c * h.size() + e); });
      });
    }
  return Digraph(std::move(names), std::move(out));
}

Digraph product(const std::vector<Digraph>& gs) {
  if (gs.empty()) throw InputError("product of no graphs");
  Digraph acc = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) acc = product(acc, gs[i]);
  return acc;
}

namespace {

ZigzagDemoResult solve_on_zigzag_metric(const Digraph& g, const std::vector<SelfMap>& fs, const std::string& route,
                                        bool check_hyperconvex) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!is_graph_homomorphism(g, g, fs[i].image))
      throw InputError("map " + std::to_string(i) + " is not a graph endomorphism");
  const ZigzagSpace zs = zigzag_space(g);
  if (!zs.complete) throw InternalError("zigzag distances incomplete");
  const auto values = value_set(zs.space);
  if (check_hyperconvex) {
    const auto hc = is_hyperconvex(zs.space, values);
    if (!hc.ok) throw HypothesisViolation("zigzag product fixed point", "graph is not hyperconvex (" + hc.failure + ")");
    const auto bd = is_bounded(zs.space, values);
    if (!bd.ok)
      throw HypothesisViolation("zigzag product fixed point",
                                "graph is not bounded; inaccessible value " + bd.inaccessible->to_string());
  }
  const RelSys sys = to_relsys(zs.space, values);
  const CommonFixedReport rep = sys.common_fixed_points(fs);
  return {rep.fixed, rep.witness, route};
}

}  // namespace

ZigzagDemoResult zigzag_fixed_point_demo_retract(const Digraph& g, const std::vector<Word>& factors, const VMap& s,
                                                 const VMap& r, const std::vector<SelfMap>& fs) {
  std::vector<Digraph> zs;
  for (const Word& u : factors) zs.push_back(zigzag_from_word(u));
  const Digraph p = product(zs);
  if (!is_graph_homomorphism(g, p, s)) throw InputError("section is not a graph homomorphism into the product");
  if (!is_graph_homomorphism(p, g, r)) throw InputError("retraction is not a graph homomorphism onto the graph");
  for (std::size_t x = 0; x < g.size(); ++x)
    if (r[s[x]] != x)
      throw InputError("retraction does not undo the section at " + g.vertices()[x] + " (maps to " +
                       g.vertices()[r[s[x]]] + ")");
  return solve_on_zigzag_metric(g, fs, "retract", false);
}

ZigzagDemoResult zigzag_fixed_point_demo_direct(const Digraph& g, const std::vector<SelfMap>& fs) {
  return solve_on_zigzag_metric(g, fs, "direct", true);
}

std::string to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
  for (auto [x, y] : g.arcs())
    if (x != y) os << "  \"" << g.vertices()[x] << "\" -> \"" << g.vertices()[y] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hyperfix
