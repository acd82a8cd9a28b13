#include <doctest.h>

#include "bridge.hpp"
#include "hyperfix/error.hpp"
#include "hyperfix/poset.hpp"
#include "hyperfix/vspace.hpp"
#include "oracles.hpp"

using namespace hyperfix;

namespace {

using VS = VSpace<TableMonoid>;
const Value Z{0}, P{1}, M{2}, T{3};

VS chain2() { return bridge::v4_space({0, 1, 2, 0}, 2); }
VS vee() {  // 0 below a and b, no top
  return bridge::v4_space({0, 1, 1, 2, 0, 3, 2, 3, 0}, 3);
}
VS point() { return bridge::v4_space({0}, 1); }

std::vector<VS> small_v4_spaces(std::size_t maxn) {
  std::vector<VS> out;
  for (std::size_t n = 1; n <= maxn; ++n)
    for (const auto& d : oracle::all_v4_spaces(n)) out.push_back(bridge::v4_space(d, n));
  return out;
}

}  // namespace

TEST_CASE("V4 tables") {
  const TableMonoid m = TableMonoid::v4();
  CHECK(m.validate().empty());
  CHECK(m.distributive());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Value va{static_cast<std::uint16_t>(a)}, vb{static_cast<std::uint16_t>(b)};
      CHECK(m.oplus(va, vb).id == oracle::v4_join(a, b));
      CHECK(m.leq(va, vb) == oracle::v4_leq(a, b));
      CHECK(m.involute(va).id == oracle::v4_inv(a));
    }
  CHECK(m.parse("−") == M);
  CHECK_THROWS_AS(m.parse("2"), InputError);
  // d_V is the least r with p <= q + r̄ and q <= p + r
  for (Value p : m.carrier())
    for (Value q : m.carrier()) {
      std::optional<Value> least;
      for (Value r : m.carrier())
        if (m.leq(p, m.oplus(q, m.involute(r))) && m.leq(q, m.oplus(p, r)))
          if (!least || m.leq(r, *least)) least = r;
      CHECK(m.distance(p, q) == *least);
    }
}

TEST_CASE("axioms") {
  CHECK(check_axioms(point()).ok);
  CHECK(check_axioms(chain2()).ok);
  const auto bad = check_axioms(bridge::v4_space({0, 0, 0, 0}, 2));
  CHECK_FALSE(bad.ok);
  CHECK(bad.axiom == "identity");
  CHECK(check_axioms(bridge::v4_space({0, 1, 1, 0}, 2)).axiom == "involution");
  CHECK(check_axioms(bridge::v4_space({0, 1, 2, 2, 0, 1, 1, 2, 0}, 3)).axiom == "triangle");
  CHECK(oracle::all_v4_spaces(2).size() == 3);
}

TEST_CASE("relational view") {
  const RelSys rs = to_relsys(chain2(), value_set(chain2()));
  REQUIRE(rs.relation_count() == 4);
  CHECK(rs.relation(0).rows[0] == Subset::single(0));
  CHECK(rs.relation(1).rows[0] == Subset::of(std::vector{0, 1}));
  CHECK(rs.relation(3).rows[1] == Subset::of(std::vector{0, 1}));
  const RelSys one = to_relsys(point(), value_set(point()));
  for (const Relation& r : one.relations()) CHECK(r.rows[0] == Subset::single(0));
  CHECK_THROWS_AS(to_relsys(chain2(), std::vector<Value>{Z, P}), StructureError);
}

TEST_CASE("diameter and radius") {
  const VS c = chain2();
  CHECK(diameter(c, Subset::single(1)) == Z);
  CHECK(diameter(c, c.all()) == T);
  CHECK(radius(c, c.all()) == Z);
  CHECK(ball(c, 0, P) == c.all());
  CHECK(ball(c, 1, P) == Subset::single(1));
}

TEST_CASE("hyperconvexity") {
  CHECK(is_hyperconvex(point(), value_set(point())).ok);
  CHECK(is_hyperconvex(chain2(), value_set(chain2())).ok);
  const auto r = is_hyperconvex(vee(), value_set(vee()));
  CHECK_FALSE(r.ok);
  CHECK(family_intersection(vee(), r.witness).empty());
  // (V4, d_V) itself
  const TableMonoid m = TableMonoid::v4();
  const auto vv = space_of_values(m, m.carrier());
  CHECK(check_axioms(vv).ok);
  CHECK(is_hyperconvex(vv, m.carrier()).ok);

  // against the brute-force definition (convexity + Helly over all pairwise-meeting subfamilies)
  for (const VS& s : small_v4_spaces(4)) {
    const auto values = value_set(s);
    std::vector<std::uint64_t> balls;
    for (std::size_t x = 0; x < s.size(); ++x)
      for (Value v : values) balls.push_back(ball(s, x, v).bits());
    std::sort(balls.begin(), balls.end());
    balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
    bool convex = true;
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y)
        for (Value a : values)
          for (Value b : values)
            if (s.monoid().leq(s.d(x, y), s.monoid().oplus(a, s.monoid().involute(b))) &&
                (ball(s, x, a) & ball(s, y, b)).empty())
              convex = false;
    const bool expected = convex && oracle::helly_bruteforce(balls);
    CHECK(is_hyperconvex(s, values).ok == expected);
  }
}

TEST_CASE("accessibility and boundedness") {
  const TableMonoid m = TableMonoid::v4();
  const auto vals = m.carrier();
  CHECK_FALSE(is_accessible(m, Z, vals));
  REQUIRE(is_accessible(m, T, vals));
  CHECK(*is_accessible(m, T, vals) == P);
  for (const VS& s : small_v4_spaces(3)) CHECK(is_bounded(s, value_set(s)).ok);
}

TEST_CASE("products and the canonical embedding") {
  const VS c = chain2();
  CHECK(product(std::vector<VS>{c}).matrix() == c.matrix());
  const VS sq = product(std::vector<VS>{c, c});
  CHECK(sq.size() == 4);
  CHECK(check_axioms(sq).ok);
  const Poset square = Poset::from_covers({"00", "01", "10", "11"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(poset_to_vspace(square).matrix() == sq.matrix());
  for (std::size_t k = 0; k < 2; ++k) {
    VMap proj;
    for (std::size_t i = 0; i < 4; ++i) proj.push_back(k == 0 ? i / 2 : i % 2);
    CHECK(is_nonexpansive(sq, c, proj));
  }
  CHECK(is_hyperconvex(sq, value_set(sq)).ok);
  const auto img = canonical_embedding(point());
  CHECK(img == std::vector<std::vector<Value>>{{Z}});
  CHECK_NOTHROW(canonical_embedding(c));
  CHECK_THROWS_AS(product(std::vector<VS>{c, c, c, c, c, c, c}), CapExceeded);
}

TEST_CASE("holes") {
  const VS c = chain2();
  CHECK(is_hole(c, std::vector<Value>{Z, Z}));
  CHECK_FALSE(is_hole(point(), std::vector<Value>{Z}));
  CHECK(is_hole(vee(), std::vector<Value>{T, P, P}));
  const VMap id{0, 1};
  CHECK(is_hole_preserving(c, c, id, value_set(c)).ok);
  CHECK(hole_image(c, VMap{0, 0}, std::vector<Value>{P, M}) == std::vector<Value>{Z, T});

  // the ball family identity
  oracle::Rng rng(4);
  for (const VS& s : small_v4_spaces(4)) {
    const auto& m = s.monoid();
    for (int t = 0; t < 4; ++t) {
      std::vector<BallRef<Value>> fam;
      const std::size_t k = oracle::pick(rng, 4);
      for (std::size_t i = 0; i < k; ++i) fam.push_back({oracle::pick(rng, s.size()), Value{static_cast<std::uint16_t>(oracle::pick(rng, 4))}});
      std::vector<Value> h(s.size());
      for (std::size_t x = 0; x < s.size(); ++x) {
        Value best = m.top();
        for (Value r : m.carrier())
          for (const auto& b : fam)
            if (ball(s, b.center, b.radius).subset_of(ball(s, x, r))) best = m.meet(best, r);
        h[x] = best;
      }
      CHECK(h_from_ballfamily(s, fam) == h);
      CHECK(hole_intersection(s, h) == family_intersection(s, fam));
    }
  }
}

TEST_CASE("replete space") {
  const auto rp = replete_space(point(), value_set(point()));
  CHECK(rp.space.d(rp.embedding[0], rp.embedding[0]) == Z);
  for (const VS& s : small_v4_spaces(3)) {
    const auto values = value_set(s);
    const auto r = replete_space(s, values);
    CHECK(check_axioms(r.space).ok);
    CHECK(is_isometry(s, r.space, r.embedding));
    CHECK(is_hole_preserving(s, r.space, r.embedding, values).ok);
    for (const auto& f : r.forms) {
      CHECK(is_metric_form(s, f));
      CHECK_FALSE(is_hole(s, f));
    }
    CHECK(one_local_retract_metric(r.space, Subset::of(r.embedding)).ok);
  }
  // Not hyperconvex in general: over the 2-point antichain the two point forms have no common upper form.
  const VS anti = bridge::v4_space({0, 3, 3, 0}, 2);
  const auto ra = replete_space(anti, value_set(anti));
  const auto hc = is_hyperconvex(ra.space, value_set(anti));
  CHECK_FALSE(hc.ok);
  CHECK(hc.failure == "convexity");
}

TEST_CASE("metric one-local retracts agree with the relational view") {
  for (const VS& s : small_v4_spaces(4)) {
    const RelSys rs = to_relsys(s, value_set(s));
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s.size()); ++bits)
      CHECK(one_local_retract_metric(s, Subset(bits)).ok == rs.is_one_local_retract(Subset(bits)).ok);
  }
}

TEST_CASE("equally centered ball intersections of hyperconvex spaces have inaccessible diameter") {
  for (const VS& s : small_v4_spaces(4)) {
    const auto values = value_set(s);
    if (!is_hyperconvex(s, values).ok) continue;
    const RelSys rs = to_relsys(s, values);
    CHECK(rs.has_normal_structure().normal);
    for (const auto& m : rs.enumerate_ball_intersections())
      CHECK(rs.is_equally_centered(m.support) == !is_accessible(s.monoid(), diameter(s, m.support), values));
  }
}

TEST_CASE("word-valued spaces") {
  WordMonoid w;
  const UpSet p = UpSet::parse("+"), m = UpSet::parse("-");
  const VSpace<WordMonoid> s({"a", "b"}, w, {UpSet::zero(), p, m, UpSet::zero()});
  CHECK(check_axioms(s).ok);
  const auto vals = value_set(s);
  CHECK(std::find(vals.begin(), vals.end(), UpSet::top()) != vals.end());
  CHECK(is_hyperconvex(s, vals).ok);
  CHECK(is_bounded(s, vals).ok);
  ClosureOptions tiny;
  tiny.cap = 2;
  CHECK_THROWS_AS(closed_value_set(s, tiny), CapExceeded);
}
