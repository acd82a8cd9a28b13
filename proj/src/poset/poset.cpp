#include "hyperfix/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hyperfix/error.hpp"
#include "hyperfix/zigzag.hpp"

namespace hyperfix {

Poset::Poset(std::vector<std::string> elements, std::vector<Subset> up)
    : elements_(std::move(elements)), up_(std::move(up)) {
  const std::size_t n = elements_.size();
  if (n > Subset::max_size) throw CapExceeded("posets are limited to 64 elements");
  if (up_.size() != n) throw InputError("order has the wrong number of rows");
  down_.assign(n, Subset());
  for (std::size_t x = 0; x < n; ++x) {
    if (!up_[x].contains(x)) throw InputError("order is not reflexive at " + elements_[x]);
    up_[x].for_each([&](std::size_t y) {
      down_[y].insert(x);
      if (y != x && up_[y].contains(x)) throw InputError("order is not antisymmetric at " + elements_[x]);
      if (!up_[y].subset_of(up_[x])) throw InputError("order is not transitive at " + elements_[x]);
    });
  }
}

Poset Poset::from_covers(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = elements.size();
  if (n > Subset::max_size) throw CapExceeded("posets are limited to 64 elements");
  std::vector<Subset> up(n);
  for (std::size_t x = 0; x < n; ++x) up[x].insert(x);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("cover pair out of range");
    up[a].insert(b);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      Subset acc = up[x];
      up[x].for_each([&](std::size_t y) { acc |= up[y]; });
      if (acc != up[x]) {
        up[x] = acc;
        changed = true;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (up[x].contains(y) && up[y].contains(x))
        throw InputError("cover pairs contain a cycle through " + elements[x] + " and " + elements[y]);
  return Poset(std::move(elements), std::move(up));
}

Subset Poset::upper_bounds(Subset a) const {
  Subset out = all();
  a.for_each([&](std::size_t x) { out &= up_[x]; });
  return out;
}

Subset Poset::lower_bounds(Subset a) const {
  Subset out = all();
  a.for_each([&](std::size_t x) { out &= down_[x]; });
  return out;
}

std::optional<std::size_t> Poset::least(Subset a) const {
  std::optional<std::size_t> out;
  a.for_each([&](std::size_t x) {
    if (!out && a.subset_of(up_[x])) out = x;
  });
  return out;
}

std::optional<std::size_t> Poset::greatest(Subset a) const {
  std::optional<std::size_t> out;
  a.for_each([&](std::size_t x) {
    if (!out && a.subset_of(down_[x])) out = x;
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    up_[a].for_each([&](std::size_t b) {
      if (b == a) return;
      const Subset between = up_[a] & down_[b];
      if (between.size() == 2) out.emplace_back(a, b);
    });
  return out;
}

RelSys Poset::relsys() const {
  std::vector<Relation> rels{{"<=", up_}, {">=", down_}};
  return RelSys(elements_, std::move(rels));
}

VSpace<TableMonoid> poset_to_vspace(const Poset& p) {
  const TableMonoid v4 = TableMonoid::v4();
  const Value zero = v4.parse("0"), plus = v4.parse("+"), minus = v4.parse("-"), one = v4.parse("1");
  std::vector<Value> dist;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      dist.push_back(x == y ? zero : p.leq(x, y) ? plus : p.leq(y, x) ? minus : one);
  return VSpace<TableMonoid>(p.elements(), v4, std::move(dist));
}

Poset vspace_to_poset(const VSpace<TableMonoid>& s) {
  if (s.monoid().id() != "V4") throw InputError("ordered sets come from spaces over V4");
  const AxiomReport ax = check_axioms(s);
  if (!ax.ok) throw InputError("space violates the " + ax.axiom + " axiom");
  const Value plus = s.monoid().parse("+");
  std::vector<Subset> up(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) up[x] = ball(s, x, plus);
  return Poset(s.elements(), std::move(up));
}

bool is_order_preserving(const Poset& p, const SelfMap& f) { return is_order_preserving(p, p, f.image); }

bool is_order_preserving(const Poset& p, const Poset& q, const VMap& f) {
  if (f.size() != p.size()) return false;
  for (std::size_t y : f)
    if (y >= q.size()) return false;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !q.leq(f[x], f[y])) return false;
  return true;
}

LatticeReport is_complete_lattice(const Poset& p) {
  if (!p.sup(Subset())) return {false, Subset(), "sup"};
  if (!p.inf(Subset())) return {false, Subset(), "inf"};
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      const Subset pair = Subset::single(x) | Subset::single(y);
      if (!p.sup(pair)) return {false, pair, "sup"};
      if (!p.inf(pair)) return {false, pair, "inf"};
    }
  return {};
}

bool is_gap(const Poset& p, const Gap& g) {
  bool below = true;
  g.a.for_each([&](std::size_t x) { below = below && g.b.subset_of(p.up(x)); });
  return below && (p.upper_bounds(g.a) & p.lower_bounds(g.b)).empty();
}

std::vector<Gap> find_gaps(const Poset& p, std::size_t cap) {
  if (p.size() > cap) throw CapExceeded("gap enumeration needs |P| <= " + std::to_string(cap));
  std::vector<Gap> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.size()); ++bits) {
    const Subset a(bits);
    const Gap g{a, p.upper_bounds(a)};
    if (!p.least(g.b)) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Gap& x, const Gap& y) { return lex_less(x.a, y.a); });
  return out;
}

std::optional<Gap> finite_subgap(const Poset& p, const Gap& g) {
  if (!is_gap(p, g)) return std::nullopt;
  Gap cur = g;
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Subset* side : {&cur.a, &cur.b}) {
      for (std::size_t x : side->elements()) {
        side->erase(x);
        if (is_gap(p, cur)) {
          shrunk = true;
        } else {
          side->insert(x);
        }
      }
    }
  }
  return cur;
}

bool has_finite_subgap(const Poset& p, const Gap& g) { return finite_subgap(p, g).has_value(); }

std::vector<Value> hole_from_gap(const Poset& p, const Gap& g) {
  const TableMonoid v4 = TableMonoid::v4();
  std::vector<Value> h(p.size(), v4.parse("1"));
  g.a.for_each([&](std::size_t x) { h[x] = v4.parse("+"); });
  g.b.for_each([&](std::size_t x) { h[x] = v4.parse("-"); });
  return h;
}

bool is_chain_complete(const Poset& p) {
  if (p.size() > 20) throw CapExceeded("chain enumeration needs |P| <= 20");
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << p.size()); ++bits) {
    const Subset c(bits);
    bool chain = true;
    c.for_each([&](std::size_t x) {
      c.for_each([&](std::size_t y) { chain = chain && p.comparable(x, y); });
    });
    if (chain && (!p.sup(c) || !p.inf(c))) return false;
  }
  return true;
}

TarskiResult tarski_common_fixed_points(const Poset& p, const std::vector<SelfMap>& fs) {
  const LatticeReport lat = is_complete_lattice(p);
  if (!lat.ok) throw HypothesisViolation("Tarski", "not a complete lattice; " + lat.missing + " of " +
                                                       p.relsys().format(*lat.witness) + " is missing");
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].size() != p.size() || !is_order_preserving(p, fs[i]))
      throw InputError("map " + std::to_string(i) + " is not order-preserving");
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!commute(fs[i], fs[j]))
        throw InputError("maps " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");

  const auto space = poset_to_vspace(p);
  const RelSys sys = to_relsys(space, value_set(space));
  const CommonFixedReport rep = sys.common_fixed_points(fs);

  // Direct cross-check: from the bottom, every f keeps x <= f(x), so round-robin iteration climbs to the least
  // common fixed point.
  std::size_t x = *p.bottom();
  for (bool moved = true; moved;) {
    moved = false;
    for (const SelfMap& f : fs)
      if (f(x) != x) {
        x = f(x);
        moved = true;
      }
  }
  if (!rep.fixed.contains(x)) throw InternalError("least common fixed point missing from the solver output");
  if (!p.lower_bounds(rep.fixed).contains(x))
    throw InternalError("direct iteration did not reach the least common fixed point");
  return {rep.fixed, rep.witness, x};
}

std::size_t abian_brown_fixed_point(const Poset& p, const SelfMap& f) {
  if (f.size() != p.size() || !is_order_preserving(p, f)) throw InputError("map is not order-preserving");
  if (!is_chain_complete(p)) throw HypothesisViolation("Abian-Brown", "poset is not chain-complete");
  std::optional<std::size_t> start = p.bottom();
  if (!start) start = p.top();
  if (!start) throw HypothesisViolation("Abian-Brown", "no least or largest element");
  std::size_t x = *start;
  for (std::size_t k = 0; k <= p.size() && f(x) != x; ++k) x = f(x);
  if (f(x) != x) throw InternalError("iteration did not stabilize");
  return x;
}

Poset make_fence(const Word& orientation) {
  for (std::size_t i = 1; i < orientation.size(); ++i)
    if (orientation[i] == orientation[i - 1])
      throw InputError("fence orientation must alternate: " + orientation.str());
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i <= orientation.size(); ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 0; i < orientation.size(); ++i)
    covers.push_back(orientation[i] == '+' ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i));
  return Poset::from_covers(std::move(names), covers);
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  if (n > Subset::max_size) throw CapExceeded("product poset exceeds 64 elements");
  std::vector<std::string> names;
  std::vector<Subset> up(n);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) {
      names.push_back("(" + p.elements()[a] + "," + q.elements()[b] + ")");
      p.up(a).for_each([&](std::size_t c) {
        q.up(b).for_each([&](std::size_t e) { up[a * q.size() + b].insert(c * q.size() + e); });
      });
    }
  return Poset(std::move(names), std::move(up));
}

Poset product(const std::vector<Poset>& ps) {
  if (ps.empty()) throw InputError("product of no posets");
  Poset acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = product(acc, ps[i]);
  return acc;
}

namespace {

Digraph order_digraph(const Poset& p) {
  std::vector<Subset> rows(p.up_rows());
  return Digraph(p.elements(), std::move(rows));
}

}  // namespace

FenceDemoResult fence_product_retract_demo(const Poset& q, const std::vector<Word>& fences, const VMap& s,
                                           const VMap& r, const std::vector<SelfMap>& fs) {
  std::vector<Poset> ps;
  for (const Word& w : fences) ps.push_back(make_fence(w));
  const Poset prod = product(ps);
  if (!is_order_preserving(q, prod, s)) throw InputError("section is not order-preserving into the product");
  if (!is_order_preserving(prod, q, r)) throw InputError("retraction is not order-preserving onto the poset");
  for (std::size_t x = 0; x < q.size(); ++x)
    if (r[s[x]] != x)
      throw InputError("retraction does not undo the section at " + q.elements()[x] + " (maps to " +
                       q.elements()[r[s[x]]] + ")");
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!is_order_preserving(q, fs[i])) throw InputError("map " + std::to_string(i) + " is not order-preserving");

  // Alternating fences are exactly the order graphs of their zigzags, so the product order is a product of zigzags.
  std::vector<Word> factors = fences;
  const ZigzagDemoResult z = zigzag_fixed_point_demo_retract(order_digraph(q), factors, s, r, fs);
  return {z.fixed, z.witness, prod.size()};
}

namespace {

std::vector<std::vector<Subset>> extensions(const Poset& p) {
  // New top-index element k: choose a down-closed set L below it and an up-closed set U above it with L < U.
  const std::size_t n = p.size();
  std::vector<std::vector<Subset>> out;
  for (std::uint64_t lb = 0; lb < (std::uint64_t{1} << n); ++lb) {
    const Subset lo(lb);
    bool down_closed = true;
    lo.for_each([&](std::size_t x) { down_closed = down_closed && p.down(x).subset_of(lo); });
    if (!down_closed) continue;
    const Subset above_all = p.upper_bounds(lo);
    const Subset rest = above_all.minus(lo);
    // U ranges over up-closed subsets of `rest`; enumerate submasks.
    const std::uint64_t rb = rest.bits();
    for (std::uint64_t ub = rb;; ub = (ub - 1) & rb) {
      const Subset hi(ub);
      bool up_closed = true;
      hi.for_each([&](std::size_t x) { up_closed = up_closed && p.up(x).subset_of(hi); });
      if (up_closed) {
        std::vector<Subset> up(n + 1);
        for (std::size_t x = 0; x < n; ++x) {
          up[x] = p.up(x);
          if (lo.contains(x)) up[x].insert(n);
        }
        up[n] = hi;
        up[n].insert(n);
        out.push_back(std::move(up));
      }
      if (ub == 0) break;
    }
  }
  return out;
}

std::vector<std::uint64_t> canonical_code(const std::vector<Subset>& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> sig(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t downs = 0;
    for (std::size_t y = 0; y < n; ++y) downs += up[y].contains(x);
    sig[x] = {downs, up[x].size()};
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
  // Permute only within blocks of equal signature.
  std::vector<std::size_t> block_start(n);
  for (std::size_t i = 0; i < n; ++i) block_start[i] = (i > 0 && sig[idx[i]] == sig[idx[i - 1]]) ? block_start[i - 1] : i;
  std::vector<std::uint64_t> best;
  std::vector<std::size_t> perm = idx;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<std::size_t> pos(n);
      for (std::size_t k = 0; k < n; ++k) pos[perm[k]] = k;
      std::vector<std::uint64_t> code(n, 0);
      for (std::size_t k = 0; k < n; ++k) up[perm[k]].for_each([&](std::size_t y) { code[k] |= std::uint64_t{1} << pos[y]; });
      if (best.empty() || code < best) best = code;
      return;
    }
    for (std::size_t j = i; j < n && block_start[j] == block_start[i]; ++j) {
      std::swap(perm[i], perm[j]);
      rec(i + 1);
      std::swap(perm[i], perm[j]);
    }
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n, bool up_to_iso) {
  if (n > 7) throw CapExceeded("poset enumeration needs n <= 7");
  auto names = [](std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(std::to_string(i));
    return out;
  };
  std::vector<Poset> level{Poset({}, {})};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Poset> next;
    std::set<std::vector<std::uint64_t>> seen;
    for (const Poset& p : level)
      for (auto& up : extensions(p)) {
        if (up_to_iso && !seen.insert(canonical_code(up)).second) continue;
        next.emplace_back(names(k + 1), std::move(up));
      }
    level = std::move(next);
  }
  return level;
}

}  // namespace hyperfix
