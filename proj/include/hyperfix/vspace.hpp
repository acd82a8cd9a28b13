#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperfix/error.hpp"
#include "hyperfix/monoid.hpp"
#include "hyperfix/relsys.hpp"
#include "hyperfix/subset.hpp"

namespace hyperfix {

/// A finite generalized metric space: d is stored row-major, d(x, y) = dist[x * n + y].
template <ValueMonoid M>
class VSpace {
public:
  using V = typename M::value_type;

  VSpace(std::vector<std::string> elements, M monoid, std::vector<V> dist)
      : elements_(std::move(elements)), monoid_(std::move(monoid)), dist_(std::move(dist)) {
    if (elements_.size() > Subset::max_size) throw CapExceeded("spaces are limited to 64 points");
    if (dist_.size() != elements_.size() * elements_.size()) throw InputError("distance matrix has the wrong size");
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const M& monoid() const noexcept { return monoid_; }
  const V& d(std::size_t x, std::size_t y) const { return dist_[x * size() + y]; }
  const std::vector<V>& matrix() const noexcept { return dist_; }
  Subset all() const { return Subset::full(size()); }

  std::size_t element_index(const std::string& name) const {
    auto it = std::find(elements_.begin(), elements_.end(), name);
    if (it == elements_.end()) throw InputError("unknown element: " + name);
    return static_cast<std::size_t>(it - elements_.begin());
  }

private:
  std::vector<std::string> elements_;
  M monoid_;
  std::vector<V> dist_;
};

using VMap = std::vector<std::size_t>;

struct AxiomReport {
  bool ok = true;
  std::string axiom;                // "identity" | "triangle" | "involution"
  std::vector<std::size_t> witness;  // offending pair or triple
};

template <ValueMonoid M>
AxiomReport check_axioms(const VSpace<M>& s) {
  const auto& m = s.monoid();
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m.leq(s.d(x, y), m.zero()) != (x == y)) return {false, "identity", {x, y}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(m.involute(s.d(y, x)) == s.d(x, y))) return {false, "involution", {x, y}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!m.leq(s.d(x, y), m.oplus(s.d(x, z), s.d(z, y)))) return {false, "triangle", {x, y, z}};
  return {};
}

/// Options for the finite value universe of a word-valued space.
struct ClosureOptions {
  std::size_t maxlen = 0;  // generator length bound; 0 means the longest generator in the matrix
  std::size_t cap = 512;
  bool products = true;
  bool joins = true;
  bool meets = false;
};

/// Full carrier of the table monoid.
std::vector<Value> value_set(const VSpace<TableMonoid>& s);
/// Matrix values plus 0 and top, closed under involution and the enabled operations within the length bound.
std::vector<UpSet> closed_value_set(const VSpace<WordMonoid>& s, const ClosureOptions& opt = {});
std::vector<UpSet> value_set(const VSpace<WordMonoid>& s);

template <ValueMonoid M>
Subset ball(const VSpace<M>& s, std::size_t x, const typename M::value_type& v) {
  Subset out;
  for (std::size_t y = 0; y < s.size(); ++y)
    if (s.monoid().leq(s.d(x, y), v)) out.insert(y);
  return out;
}

template <ValueMonoid M>
typename M::value_type diameter(const VSpace<M>& s, Subset a) {
  auto v = s.monoid().zero();
  a.for_each([&](std::size_t x) { a.for_each([&](std::size_t y) { v = s.monoid().join(v, s.d(x, y)); }); });
  return v;
}

/// Meet over centers x in A of the least radius covering A from x; top for empty A.
template <ValueMonoid M>
typename M::value_type radius(const VSpace<M>& s, Subset a) {
  const auto& m = s.monoid();
  auto r = m.top();
  a.for_each([&](std::size_t x) {
    auto cover = m.zero();
    a.for_each([&](std::size_t y) { cover = m.join(cover, s.d(x, y)); });
    r = m.meet(r, cover);
  });
  return r;
}

/// One relation {(x,y) : d(x,y) <= v} per value; the value list must be closed under involution.
template <ValueMonoid M>
RelSys to_relsys(const VSpace<M>& s, const std::vector<typename M::value_type>& values) {
  const auto& m = s.monoid();
  std::set<typename M::value_type> vs(values.begin(), values.end());
  for (const auto& v : values)
    if (!vs.count(m.involute(v))) throw StructureError("value set is not closed under involution: " + m.name(v));
  std::vector<Relation> rels;
  for (const auto& v : values) {
    Relation r{"<=" + m.name(v), {}};
    for (std::size_t x = 0; x < s.size(); ++x) r.rows.push_back(ball(s, x, v));
    rels.push_back(std::move(r));
  }
  return RelSys(s.elements(), std::move(rels));
}

template <class V>
struct BallRef {
  std::size_t center = 0;
  V radius{};
};

template <class V>
struct HyperconvexReport {
  bool ok = true;
  std::string failure;             // "convexity" or "helly" when ok is false
  std::vector<BallRef<V>> witness;  // pairwise-meeting balls with empty intersection
  // Positive certificate: a common point for every triple family and every convexity instance.
  std::vector<std::pair<std::vector<BallRef<V>>, std::size_t>> points;
};

template <ValueMonoid M>
HyperconvexReport<typename M::value_type> is_hyperconvex(const VSpace<M>& s,
                                                         const std::vector<typename M::value_type>& values,
                                                         bool certify = false) {
  using V = typename M::value_type;
  const auto& m = s.monoid();
  const std::size_t n = s.size();
  HyperconvexReport<V> rep;

  std::vector<BallRef<V>> balls;
  std::vector<Subset> supports;
  {
    std::map<std::uint64_t, std::size_t> seen;
    for (std::size_t x = 0; x < n; ++x)
      for (const V& v : values) {
        const Subset b = ball(s, x, v);
        if (seen.emplace(b.bits(), balls.size()).second) {
          balls.push_back({x, v});
          supports.push_back(b);
        }
      }
  }

  // A ball family is 2-Helly iff for every three points the balls holding two of them share a point.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Subset inter = s.all();
        std::vector<BallRef<V>> fam;
        for (std::size_t i = 0; i < balls.size(); ++i) {
          const Subset sp = supports[i];
          const int hits = int(sp.contains(a)) + int(sp.contains(b)) + int(sp.contains(c));
          if (hits >= 2) {
            inter &= sp;
            fam.push_back(balls[i]);
          }
        }
        if (inter.empty()) {
          rep.ok = false;
          rep.failure = "helly";
          rep.witness = std::move(fam);
          return rep;
        }
        if (certify) rep.points.push_back({std::move(fam), inter.first()});
      }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const V& r : values)
        for (const V& t : values) {
          if (!m.leq(s.d(x, y), m.oplus(r, m.involute(t)))) continue;
          const Subset meetset = ball(s, x, r) & ball(s, y, t);
          if (meetset.empty()) {
            rep.ok = false;
            rep.failure = "convexity";
            rep.witness = {{x, r}, {y, t}};
            return rep;
          }
          if (certify) rep.points.push_back({{{x, r}, {y, t}}, meetset.first()});
        }
  return rep;
}

/// Some r with v not <= r and v <= r + r̄, if one exists among `values` (or by construction for word values).
template <ValueMonoid M>
std::optional<typename M::value_type> is_accessible(const M& m, const typename M::value_type& v,
                                                    const std::vector<typename M::value_type>& values) {
  if constexpr (std::is_same_v<M, WordMonoid>) {
    if (in_macneille(v)) return accessibility_witness(v);
  }
  for (const auto& r : values)
    if (!m.leq(v, r) && m.leq(v, m.oplus(r, m.involute(r)))) return r;
  return std::nullopt;
}

template <class V>
struct BoundedReport {
  bool ok = true;
  std::optional<V> inaccessible;  // a nonzero inaccessible value below the diameter
};

template <ValueMonoid M>
BoundedReport<typename M::value_type> is_bounded(const VSpace<M>& s,
                                                 const std::vector<typename M::value_type>& values) {
  const auto& m = s.monoid();
  const auto delta = diameter(s, s.all());
  auto candidates = values;
  candidates.push_back(delta);
  for (const auto& c : candidates) {
    if (c == m.zero() || !m.leq(c, delta)) continue;
    if (!is_accessible(m, c, values)) return {false, c};
  }
  return {};
}

/// Sup-distance product; element names are "(a,b,...)".
template <ValueMonoid M>
VSpace<M> product(const std::vector<VSpace<M>>& spaces, std::size_t cap = 4096) {
  if (spaces.empty()) throw InputError("product of no spaces");
  std::size_t total = 1;
  for (const auto& s : spaces) {
    total *= s.size();
    if (total > cap) throw CapExceeded("product has more than " + std::to_string(cap) + " points");
  }
  if (spaces.size() == 1) return spaces.front();
  if (total > Subset::max_size) throw CapExceeded("product exceeds 64 points");
  const auto& m = spaces.front().monoid();
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& s : spaces) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t i = 0; i < s.size(); ++i) {
        next.push_back(t);
        next.back().push_back(i);
      }
    tuples = std::move(next);
  }
  std::vector<std::string> names;
  for (const auto& t : tuples) {
    std::string nm = "(";
    for (std::size_t k = 0; k < t.size(); ++k) nm += (k ? "," : "") + spaces[k].elements()[t[k]];
    names.push_back(nm + ")");
  }
  std::vector<typename M::value_type> dist;
  for (const auto& t : tuples)
    for (const auto& u : tuples) {
      auto v = m.zero();
      for (std::size_t k = 0; k < t.size(); ++k) v = m.join(v, spaces[k].d(t[k], u[k]));
      dist.push_back(v);
    }
  return VSpace<M>(std::move(names), m, std::move(dist));
}

/// The values with the canonical distance d_V.
template <ValueMonoid M>
VSpace<M> space_of_values(const M& m, const std::vector<typename M::value_type>& values) {
  std::vector<std::string> names;
  std::vector<typename M::value_type> dist;
  for (const auto& p : values) {
    names.push_back(m.name(p));
    for (const auto& q : values) dist.push_back(m.distance(p, q));
  }
  return VSpace<M>(std::move(names), m, std::move(dist));
}

/// x -> (d(z, x))_z, checked to be isometric into the power of (V, d_V); throws InternalError otherwise.
template <ValueMonoid M>
std::vector<std::vector<typename M::value_type>> canonical_embedding(const VSpace<M>& s) {
  const auto& m = s.monoid();
  const std::size_t n = s.size();
  std::vector<std::vector<typename M::value_type>> img(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) img[x].push_back(s.d(z, x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto sup = m.zero();
      for (std::size_t z = 0; z < n; ++z) sup = m.join(sup, m.distance(img[x][z], img[y][z]));
      if (!(sup == s.d(x, y)))
        throw InternalError("canonical embedding is not isometric at (" + s.elements()[x] + ", " + s.elements()[y] +
                            ")");
    }
  return img;
}

template <ValueMonoid M>
bool is_nonexpansive(const VSpace<M>& s, const VSpace<M>& t, const VMap& f) {
  if (f.size() != s.size()) return false;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (!s.monoid().leq(t.d(f[x], f[y]), s.d(x, y))) return false;
  return true;
}

template <ValueMonoid M>
bool is_isometry(const VSpace<M>& s, const VSpace<M>& t, const VMap& f) {
  if (f.size() != s.size()) return false;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (!(t.d(f[x], f[y]) == s.d(x, y))) return false;
  return true;
}

template <ValueMonoid M>
Subset hole_intersection(const VSpace<M>& s, const std::vector<typename M::value_type>& h) {
  Subset out = s.all();
  for (std::size_t x = 0; x < s.size(); ++x) out &= ball(s, x, h[x]);
  return out;
}

template <ValueMonoid M>
bool is_hole(const VSpace<M>& s, const std::vector<typename M::value_type>& h) {
  return hole_intersection(s, h).empty();
}

/// h_f(y) = meet of h(x) over f(x) = y, top off the range.
template <ValueMonoid M>
std::vector<typename M::value_type> hole_image(const VSpace<M>& t, const VMap& f,
                                               const std::vector<typename M::value_type>& h) {
  const auto& m = t.monoid();
  std::vector<typename M::value_type> out(t.size(), m.top());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = m.meet(out[f[x]], h[x]);
  return out;
}

template <class V>
struct HolePreservingReport {
  bool ok = true;
  std::optional<std::vector<V>> counterexample;  // a hole of the source whose image is not a hole
};

/// Exhaustive over all maps E -> values; throws CapExceeded past `cap` candidates.
template <ValueMonoid M>
HolePreservingReport<typename M::value_type> is_hole_preserving(const VSpace<M>& s, const VSpace<M>& t,
                                                                const VMap& f,
                                                                const std::vector<typename M::value_type>& values,
                                                                std::size_t cap = 1u << 20) {
  const std::size_t n = s.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= values.size();
    if (total > cap) throw CapExceeded("hole enumeration exceeds " + std::to_string(cap) + " candidates");
  }
  std::vector<std::size_t> digits(n, 0);
  std::vector<typename M::value_type> h(n);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < n; ++i) h[i] = values[digits[i]];
    if (is_hole(s, h) && !is_hole(t, hole_image(t, f, h))) return {false, h};
    for (std::size_t i = 0; i < n && ++digits[i] == values.size(); ++i) digits[i] = 0;
  }
  return {};
}

/// Definitional test: for every x outside A, fixing A and moving x into A is nonexpansive on A + {x}.
template <ValueMonoid M>
OlrReport one_local_retract_metric(const VSpace<M>& s, Subset a) {
  const auto& m = s.monoid();
  OlrReport rep;
  for (std::size_t x = 0; x < s.size(); ++x) rep.retraction.push_back(x);
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (a.contains(x)) continue;
    std::optional<std::size_t> img;
    a.for_each([&](std::size_t b) {
      if (img) return;
      bool ok = true;
      a.for_each([&](std::size_t u) {
        ok = ok && m.leq(s.d(u, b), s.d(u, x)) && m.leq(s.d(b, u), s.d(x, u));
      });
      if (ok) img = b;
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

/// Isometry onto the image together with the image being a one-local retract of the target.
template <ValueMonoid M>
bool hole_preserving_by_retract(const VSpace<M>& s, const VSpace<M>& t, const VMap& f) {
  if (!is_isometry(s, t, f)) return false;
  Subset image;
  for (std::size_t y : f) image.insert(y);
  return one_local_retract_metric(t, image).ok;
}

/// h(x) = meet over the family of the least radius at x whose ball contains the family member.
template <ValueMonoid M>
std::vector<typename M::value_type> h_from_ballfamily(const VSpace<M>& s,
                                                      const std::vector<BallRef<typename M::value_type>>& family) {
  const auto& m = s.monoid();
  std::vector<typename M::value_type> h(s.size(), m.top());
  for (const auto& b : family) {
    const Subset sp = ball(s, b.center, b.radius);
    for (std::size_t x = 0; x < s.size(); ++x) {
      auto cover = m.zero();
      sp.for_each([&](std::size_t z) { cover = m.join(cover, s.d(x, z)); });
      h[x] = m.meet(h[x], cover);
    }
  }
  return h;
}

template <ValueMonoid M>
Subset family_intersection(const VSpace<M>& s, const std::vector<BallRef<typename M::value_type>>& family) {
  Subset out = s.all();
  for (const auto& b : family) out &= ball(s, b.center, b.radius);
  return out;
}

template <ValueMonoid M>
bool is_metric_form(const VSpace<M>& s, const std::vector<typename M::value_type>& h) {
  const auto& m = s.monoid();
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (!m.leq(s.d(x, y), m.oplus(h[x], m.involute(h[y])))) return false;
      if (!m.leq(h[x], m.oplus(s.d(x, y), h[y]))) return false;
    }
  return true;
}

template <ValueMonoid M>
struct RepleteSpace {
  VSpace<M> space;
  std::vector<std::vector<typename M::value_type>> forms;
  VMap embedding;  // x -> index of the form y -> d(y, x)
};

/// Metric forms over `values` whose balls meet, with the sup d_V distance, and the embedding of the space.
template <ValueMonoid M>
RepleteSpace<M> replete_space(const VSpace<M>& s, const std::vector<typename M::value_type>& values,
                              std::size_t cap = 1u << 16) {
  using V = typename M::value_type;
  const auto& m = s.monoid();
  const std::size_t n = s.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= values.size();
    if (total > cap) throw CapExceeded("metric-form enumeration exceeds " + std::to_string(cap) + " candidates");
  }
  std::vector<std::vector<V>> forms;
  std::vector<std::size_t> digits(n, 0);
  std::vector<V> h(n);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < n; ++i) h[i] = values[digits[i]];
    if (is_metric_form(s, h) && !is_hole(s, h)) forms.push_back(h);
    for (std::size_t i = 0; i < n && ++digits[i] == values.size(); ++i) digits[i] = 0;
  }
  std::sort(forms.begin(), forms.end());
  if (forms.size() > Subset::max_size) throw CapExceeded("replete space has more than 64 points");

  std::vector<std::string> names;
  for (const auto& f : forms) {
    std::string nm = "[";
    for (std::size_t i = 0; i < f.size(); ++i) nm += (i ? ";" : "") + m.name(f[i]);
    names.push_back(nm + "]");
  }
  std::vector<V> dist;
  for (const auto& f : forms)
    for (const auto& g : forms) {
      V v = m.zero();
      for (std::size_t i = 0; i < n; ++i) v = m.join(v, m.distance(f[i], g[i]));
      dist.push_back(v);
    }
  RepleteSpace<M> out{VSpace<M>(std::move(names), m, std::move(dist)), forms, {}};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<V> col;
    for (std::size_t y = 0; y < n; ++y) col.push_back(s.d(y, x));
    auto it = std::lower_bound(out.forms.begin(), out.forms.end(), col);
    if (it == out.forms.end() || !(*it == col)) throw InternalError("distance column is not a metric form with a point");
    out.embedding.push_back(static_cast<std::size_t>(it - out.forms.begin()));
  }
  return out;
}

}  // namespace hyperfix
