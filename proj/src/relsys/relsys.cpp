#include "hyperfix/relsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "hyperfix/error.hpp"

namespace hyperfix {

Subset SelfMap::apply(Subset a) const {
  Subset out;
  a.for_each([&](std::size_t x) { out.insert(image[x]); });
  return out;
}

Subset SelfMap::fixed_points() const {
  Subset out;
  for (std::size_t x = 0; x < image.size(); ++x)
    if (image[x] == x) out.insert(x);
  return out;
}

SelfMap SelfMap::identity(std::size_t n) {
  SelfMap f;
  for (std::size_t x = 0; x < n; ++x) f.image.push_back(x);
  return f;
}

SelfMap SelfMap::constant(std::size_t n, std::size_t c) { return SelfMap{std::vector<std::size_t>(n, c)}; }

SelfMap compose(const SelfMap& f, const SelfMap& g) {
  SelfMap h;
  for (std::size_t x = 0; x < g.size(); ++x) h.image.push_back(f(g(x)));
  return h;
}

bool commute(const SelfMap& f, const SelfMap& g) { return compose(f, g) == compose(g, f); }

RelSys::RelSys(std::vector<std::string> elements, std::vector<Relation> relations)
    : elements_(std::move(elements)), relations_(std::move(relations)) {
  const std::size_t n = elements_.size();
  if (n > Subset::max_size) throw CapExceeded("relational systems are limited to 64 elements");
  for (const Relation& r : relations_) {
    if (r.rows.size() != n) throw InputError("relation " + r.name + " has the wrong number of rows");
    for (Subset row : r.rows)
      if (!row.subset_of(all())) throw InputError("relation " + r.name + " mentions an unknown element");
  }
  inverse_.assign(relations_.size(), std::nullopt);
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    Relation inv{"", std::vector<Subset>(n)};
    for (std::size_t x = 0; x < n; ++x) relations_[i].rows[x].for_each([&](std::size_t y) { inv.rows[y].insert(x); });
    for (std::size_t j = 0; j < relations_.size(); ++j)
      if (relations_[j] == inv) {
        inverse_[i] = j;
        break;
      }
    if (!inverse_[i]) involutive_ = false;
    if (!(inv == relations_[i])) symmetric_ = false;
    for (std::size_t x = 0; x < n; ++x)
      if (!relations_[i].contains(x, x)) reflexive_ = false;
  }
}

RelSys RelSys::from_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::vector<std::pair<std::size_t, std::size_t>>>>& rels) {
  std::vector<Relation> out;
  for (const auto& [name, pairs] : rels) {
    Relation r{name, std::vector<Subset>(elements.size())};
    for (auto [x, y] : pairs) {
      if (x >= elements.size() || y >= elements.size()) throw InputError("relation " + name + ": pair out of range");
      r.rows[x].insert(y);
    }
    out.push_back(std::move(r));
  }
  return RelSys(std::move(elements), std::move(out));
}

std::size_t RelSys::element_index(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) throw InputError("unknown element: " + name);
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t RelSys::relation_index(const std::string& name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return i;
  throw InputError("unknown relation: " + name);
}

RelSys RelSys::restrict(Subset a) const {
  const auto idx = a.elements();
  std::vector<std::string> names;
  for (std::size_t i : idx) names.push_back(elements_[i]);
  std::vector<Relation> rels;
  for (const Relation& r : relations_) {
    Relation s{r.name, std::vector<Subset>(idx.size())};
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (r.contains(idx[i], idx[j])) s.rows[i].insert(j);
    rels.push_back(std::move(s));
  }
  return RelSys(std::move(names), std::move(rels));
}

Subset RelSys::ball(std::size_t x, std::size_t r) const {
  if (x >= size()) throw InputError("unknown element index " + std::to_string(x));
  if (r >= relations_.size()) throw InputError("unknown relation index " + std::to_string(r));
  return relations_[r].rows[x];
}

Subset RelSys::center(Subset a, std::size_t r) const {
  Subset out;
  for (std::size_t x = 0; x < size(); ++x)
    if (a.subset_of(relations_[r].rows[x])) out.insert(x);
  return out;
}

Subset RelSys::cov(Subset a) const {
  Subset out = all();
  for (const Relation& r : relations_)
    for (Subset row : r.rows)
      if (a.subset_of(row)) out &= row;
  return out;
}

RelationSet RelSys::diameter_set(Subset a) const {
  RelationSet out(relations_.size(), false);
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    bool ok = true;
    a.for_each([&](std::size_t x) { ok = ok && a.subset_of(relations_[r].rows[x]); });
    out[r] = ok;
  }
  return out;
}

RelationSet RelSys::radius_set(Subset a) const {
  RelationSet out(relations_.size(), false);
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    bool ok = false;
    a.for_each([&](std::size_t x) { ok = ok || a.subset_of(relations_[r].rows[x]); });
    out[r] = ok;
  }
  return out;
}

bool RelSys::is_equally_centered(Subset a) const { return diameter_set(a) == radius_set(a); }

BallSetMember RelSys::cover_witness(Subset a) const {
  BallSetMember m{all(), {}};
  for (std::size_t r = 0; r < relations_.size(); ++r)
    for (std::size_t x = 0; x < size(); ++x) {
      const Subset b = relations_[r].rows[x];
      if (a.subset_of(b) && (m.support & b) != m.support) {
        m.support &= b;
        m.witness.emplace_back(x, r);
      }
    }
  return m;
}

std::vector<BallSetMember> RelSys::enumerate_ball_intersections(std::size_t cap) const {
  if (size() > cap)
    throw CapExceeded("ball-intersection enumeration needs |E| <= " + std::to_string(cap) + ", got " +
                      std::to_string(size()));
  std::vector<BallSetMember> members{{all(), {}}};
  std::unordered_map<std::uint64_t, std::size_t> seen{{all().bits(), 0}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t r = 0; r < relations_.size(); ++r)
      for (std::size_t x = 0; x < size(); ++x) {
        const Subset s = members[i].support & relations_[r].rows[x];
        if (s.empty() || seen.count(s.bits())) continue;
        BallSetMember m{s, members[i].witness};
        m.witness.emplace_back(x, r);
        seen.emplace(s.bits(), members.size());
        members.push_back(std::move(m));
      }
  }
  if (size() == 0) members.clear();
  for (BallSetMember& m : members) {
    Subset running = all();
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    for (auto [x, r] : m.witness) {
      const Subset b = relations_[r].rows[x];
      if ((running & b) != running) {
        running &= b;
        kept.emplace_back(x, r);
      }
    }
    m.witness = std::move(kept);
  }
  std::sort(members.begin(), members.end(),
            [](const BallSetMember& a, const BallSetMember& b) { return lex_less(a.support, b.support); });
  return members;
}

NormalityReport RelSys::has_normal_structure(std::size_t cap) const {
  for (BallSetMember& m : enumerate_ball_intersections(cap))
    if (m.support.size() != 1 && is_equally_centered(m.support)) return {false, std::move(m)};
  return {true, std::nullopt};
}

bool RelSys::is_endomorphism(const SelfMap& f) const {
  if (f.size() != size()) return false;
  for (const Relation& r : relations_)
    for (std::size_t x = 0; x < size(); ++x) {
      const Subset img = f.apply(r.rows[x]);
      if (!img.subset_of(r.rows[f(x)])) return false;
    }
  return true;
}

bool RelSys::is_retraction(const SelfMap& g) const { return is_endomorphism(g) && compose(g, g) == g; }

void RelSys::check_map(const SelfMap& f) const {
  if (f.size() != size()) throw InputError("map is not total on the carrier");
  for (std::size_t y : f.image)
    if (y >= size()) throw InputError("map sends a point outside the carrier");
}

BallSetMember RelSys::minimal_invariant_ballset(const SelfMap& f, std::size_t cap) const {
  if (!involutive_) throw StructureError("system is not involutive");
  check_map(f);
  if (!is_endomorphism(f)) throw InputError("map is not an endomorphism");
  if (size() == 0) throw InputError("empty carrier");

  Subset a = all();
  for (bool changed = true; changed;) {
    changed = false;
    const Subset c = cov(f.apply(a));
    if (c != a) {
      a = c;
      changed = true;
      continue;
    }
    const RelationSet rad = radius_set(a);
    for (std::size_t r = 0; r < rad.size() && !changed; ++r) {
      if (!rad[r]) continue;
      const Subset b = center(a, r) & a;
      if (b != a && !b.empty() && f.apply(b).subset_of(b)) {
        a = b;
        changed = true;
      }
    }
  }

  if (size() <= cap) {
    std::vector<Subset> inv;
    for (const BallSetMember& m : enumerate_ball_intersections(cap))
      if (m.support.subset_of(a) && f.apply(m.support).subset_of(m.support)) inv.push_back(m.support);
    std::optional<Subset> best;
    for (Subset s : inv) {
      const bool minimal = std::none_of(inv.begin(), inv.end(), [&](Subset t) { return t != s && t.subset_of(s); });
      if (minimal && (!best || lex_less(s, *best))) best = s;
    }
    if (!best) throw InternalError("descent produced no invariant ball-intersection");
    a = *best;
  }
  BallSetMember out = cover_witness(a);
  if (out.support != a) throw InternalError("descent left the ball-intersection family");
  return out;
}

std::size_t RelSys::fixed_point(const SelfMap& f, std::size_t cap) const {
  if (!involutive_) throw StructureError("system is not involutive");
  check_map(f);
  if (!is_endomorphism(f)) throw InputError("map is not an endomorphism");
  if (size() == 0) throw InputError("empty carrier");
  const NormalityReport norm = has_normal_structure(cap);
  if (!norm.normal)
    throw HypothesisViolation("normal-structure fixed point",
                              "no normal structure; equally centered ball-intersection " +
                                  format(norm.counterexample->support));
  const BallSetMember m = minimal_invariant_ballset(f, cap);
  if (m.support.size() != 1) throw InternalError("minimal invariant ball-intersection is not a singleton");
  const std::size_t x = m.support.first();
  if (f(x) != x) throw InternalError("descent point is not fixed");
  return x;
}

CommonFixedReport RelSys::common_fixed_points(const std::vector<SelfMap>& fs, std::size_t cap) const {
  if (!reflexive_) throw StructureError("system is not reflexive");
  if (!involutive_) throw StructureError("system is not involutive");
  if (size() == 0) throw InputError("empty carrier");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    check_map(fs[i]);
    if (!is_endomorphism(fs[i])) throw InputError("map " + std::to_string(i) + " is not an endomorphism");
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!commute(fs[i], fs[j]))
        throw InputError("maps " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  const NormalityReport norm = has_normal_structure(cap);
  if (!norm.normal)
    throw HypothesisViolation("commuting-family fixed point",
                              "no normal structure; equally centered ball-intersection " +
                                  format(norm.counterexample->support));

  CommonFixedReport rep;
  rep.fixed = all();
  rep.witness = 0;
  for (const SelfMap& f : fs) {
    const auto idx = rep.fixed.elements();
    const RelSys sub = restrict(rep.fixed);
    SelfMap g;
    for (std::size_t i : idx) {
      auto pos = std::lower_bound(idx.begin(), idx.end(), f(i));
      if (pos == idx.end() || *pos != f(i)) throw InternalError("map does not preserve the common fixed set");
      g.image.push_back(static_cast<std::size_t>(pos - idx.begin()));
    }
    try {
      rep.witness = idx[sub.fixed_point(g, cap)];
    } catch (const HypothesisViolation& e) {
      throw InternalError(std::string("fixed-point set lost normal structure: ") + e.what());
    }
    rep.fixed &= f.fixed_points();
    rep.stages.push_back(rep.fixed);
  }
  if (!rep.fixed.contains(rep.witness)) throw InternalError("witness is not a common fixed point");
  rep.certificate = is_one_local_retract(rep.fixed);
  if (!rep.certificate.ok) throw InternalError("common fixed set is not a one-local retract");
  return rep;
}

OlrReport RelSys::is_one_local_retract(Subset a) const {
  OlrReport rep;
  rep.retraction = SelfMap::identity(size()).image;
  auto extends = [&](std::size_t x, std::size_t img) {
    for (const Relation& r : relations_) {
      if (r.contains(x, x) && !r.contains(img, img)) return false;
      bool ok = true;
      a.for_each([&](std::size_t u) {
        if (r.contains(u, x) && !r.contains(u, img)) ok = false;
        if (r.contains(x, u) && !r.contains(img, u)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  };
  for (std::size_t x = 0; x < size(); ++x) {
    if (a.contains(x)) continue;
    Subset b = all();
    for (const Relation& r : relations_)
      a.for_each([&](std::size_t u) {
        if (r.contains(u, x)) b &= r.rows[u];
      });
    std::optional<std::size_t> img;
    const Subset cand = b & a;
    if (!cand.empty() && extends(x, cand.first())) img = cand.first();
    if (!img)
      a.for_each([&](std::size_t y) {
        if (!img && extends(x, y)) img = y;
      });
    if (!img) {
      rep.failing_point = x;
      return rep;
    }
    rep.retraction[x] = *img;
  }
  rep.ok = true;
  return rep;
}

bool RelSys::chain_intersection_is_olr(const std::vector<Subset>& chain) const {
  if (!reflexive_ || !involutive_) throw StructureError("system must be reflexive and involutive");
  Subset inter = all();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0 && !chain[i].subset_of(chain[i - 1])) throw InputError("chain is not descending at member " + std::to_string(i));
    if (!is_one_local_retract(chain[i]).ok)
      throw HypothesisViolation("descending chain of one-local retracts",
                                "member " + std::to_string(i) + " is not a one-local retract");
    inter &= chain[i];
  }
  return is_one_local_retract(inter).ok;
}

std::string RelSys::format(Subset a) const {
  std::string out = "{";
  bool first = true;
  a.for_each([&](std::size_t x) {
    if (!first) out += ',';
    out += x < elements_.size() ? elements_[x] : std::to_string(x);
    first = false;
  });
  return out + "}";
}

InvariantRelations invariant_binary_relations(std::size_t n, const std::vector<SelfMap>& fs) {
  if (n > 3) throw CapExceeded("invariant relation enumeration needs |E| <= 3");
  const std::size_t bits = n * n;
  auto bit = [n](std::size_t x, std::size_t y) { return x * n + y; };
  for (const SelfMap& f : fs)
    if (f.size() != n) throw InputError("map is not total on the carrier");

  InvariantRelations out;
  std::set<std::uint64_t> present;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    const Subset rel(mask);
    bool ok = true;
    for (const SelfMap& f : fs)
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y)
          if (rel.contains(bit(x, y)) && !rel.contains(bit(f(x), f(y)))) ok = false;
    if (ok) {
      out.relations.push_back(rel);
      present.insert(mask);
    }
  }
  auto has = [&](Subset s) { return present.count(s.bits()) > 0; };
  Subset diag;
  for (std::size_t x = 0; x < n; ++x) diag.insert(bit(x, x));
  out.has_diagonal = has(diag);
  out.closed_intersection = out.closed_union = out.closed_composition = out.closed_inverse = true;
  for (Subset p : out.relations) {
    Subset inv;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (p.contains(bit(x, y))) inv.insert(bit(y, x));
    out.closed_inverse = out.closed_inverse && has(inv);
    for (Subset q : out.relations) {
      out.closed_intersection = out.closed_intersection && has(p & q);
      out.closed_union = out.closed_union && has(p | q);
      Subset comp;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (p.contains(bit(x, y)) && q.contains(bit(y, z))) comp.insert(bit(x, z));
      out.closed_composition = out.closed_composition && has(comp);
    }
  }
  return out;
}

}  // namespace hyperfix
