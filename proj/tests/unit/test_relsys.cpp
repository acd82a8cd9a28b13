#include <doctest.h>

#include "bridge.hpp"
#include "hyperfix/error.hpp"
#include "hyperfix/relsys.hpp"
#include "oracles.hpp"

using namespace hyperfix;

namespace {

// 0 < 1 with the order and its inverse.
RelSys chain2() { return RelSys::from_pairs({"0", "1"}, {{"<=", {{0, 0}, {0, 1}, {1, 1}}}, {">=", {{0, 0}, {1, 0}, {1, 1}}}}); }

// k random reflexive relations together with their inverses.
RelSys random_system(oracle::Rng& rng, std::size_t n, std::size_t k, double density) {
  std::vector<Relation> rels;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t r = 0; r < k; ++r) {
    Relation a{"r" + std::to_string(r), std::vector<Subset>(n)}, b{"r" + std::to_string(r) + "^-1", std::vector<Subset>(n)};
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x == y || u(rng) < density) {
          a.rows[x].insert(y);
          b.rows[y].insert(x);
        }
    rels.push_back(a);
    rels.push_back(b);
  }
  return RelSys(bridge::names(n), rels);
}

bool extends_to_retraction(const RelSys& rs, Subset a, std::size_t x, std::size_t b) {
  const Subset dom = a | Subset::single(x);
  for (const Relation& rel : rs.relations())
    for (std::size_t u : dom.elements())
      for (std::size_t v : dom.elements()) {
        const std::size_t iu = u == x ? b : u, iv = v == x ? b : v;
        if (rel.contains(u, v) && !rel.contains(iu, iv)) return false;
      }
  return true;
}

// Definition: every single added point retracts back onto A.
bool olr_by_definition(const RelSys& rs, Subset a) {
  for (std::size_t x = 0; x < rs.size(); ++x) {
    if (a.contains(x)) continue;
    bool some = false;
    for (std::size_t b : a.elements()) some = some || extends_to_retraction(rs, a, x, b);
    if (!some) return false;
  }
  return true;
}

std::vector<SelfMap> endomorphisms(const RelSys& rs) {
  std::vector<SelfMap> out;
  for (const auto& f : oracle::all_maps(rs.size()))
    if (rs.is_endomorphism(SelfMap{f})) out.push_back(SelfMap{f});
  return out;
}

}  // namespace

TEST_CASE("balls, centers, covers on the 2-chain") {
  const RelSys c = chain2();
  const std::size_t le = c.relation_index("<="), ge = c.relation_index(">=");
  CHECK(c.ball(0, le) == Subset::of(std::vector{0, 1}));
  CHECK(c.ball(1, le) == Subset::single(1));
  CHECK(c.ball(0, ge) == Subset::single(0));
  CHECK(c.center(Subset::of(std::vector{0, 1}), le) == Subset::single(0));
  CHECK(c.center(Subset(), le) == c.all());
  CHECK(c.center(Subset::single(1), ge) == Subset::single(1));
  CHECK(c.cov(c.all()) == c.all());
  CHECK(c.cov(Subset::of(std::vector{0, 1})) == c.all());
  CHECK(c.diameter_set(c.all()) == RelationSet{false, false});
  CHECK(c.radius_set(c.all()) == RelationSet{true, true});
  CHECK(c.diameter_set(Subset()) == RelationSet{true, true});
  CHECK(c.radius_set(Subset()) == RelationSet{false, false});
  CHECK(c.is_equally_centered(Subset::single(0)));
  CHECK_FALSE(c.is_equally_centered(c.all()));
  CHECK_FALSE(c.is_equally_centered(Subset()));
  CHECK(c.reflexive());
  CHECK(c.involutive());
  CHECK_THROWS_AS(c.relation_index("<"), InputError);
}

TEST_CASE("ball intersections and normal structure") {
  const RelSys c = chain2();
  const auto fam = c.enumerate_ball_intersections();
  std::set<std::uint64_t> supports;
  for (const auto& m : fam) supports.insert(m.support.bits());
  CHECK(supports == std::set<std::uint64_t>{1, 2, 3});
  for (const auto& m : fam) {
    Subset inter = c.all();
    for (auto [x, r] : m.witness) inter &= c.ball(x, r);
    CHECK(inter == m.support);
  }
  CHECK(c.has_normal_structure().normal);

  const RelSys full = RelSys::from_pairs({"a", "b"}, {{"all", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}});
  CHECK(full.enumerate_ball_intersections().size() == 1);
  CHECK_FALSE(full.has_normal_structure().normal);
  const RelSys none = RelSys::from_pairs({"a", "b"}, {});
  CHECK(none.enumerate_ball_intersections().size() == 1);
  const RelSys one = RelSys::from_pairs({"a"}, {{"=", {{0, 0}}}});
  CHECK(one.has_normal_structure().normal);

  const RelSys big(bridge::names(13), {});
  CHECK_THROWS_AS(big.enumerate_ball_intersections(), CapExceeded);
}

TEST_CASE("center and cover identities on random systems") {
  oracle::Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + oracle::pick(rng, 5);
    const RelSys rs = random_system(rng, n, 1 + oracle::pick(rng, 2), 0.35);
    // ball-intersection family, brute force: close the balls and E under intersection
    std::set<std::uint64_t> fam{rs.all().bits()};
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t r = 0; r < rs.relation_count(); ++r) fam.insert(rs.ball(x, r).bits());
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::uint64_t> cur(fam.begin(), fam.end());
      for (auto a : cur)
        for (auto b : cur) grew |= fam.insert(a & b).second;
    }
    fam.erase(0);
    std::set<std::uint64_t> got;
    for (const auto& m : rs.enumerate_ball_intersections()) got.insert(m.support.bits());
    CHECK(got == fam);

    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Subset a(bits);
      const Subset cv = rs.cov(a);
      CHECK(a.subset_of(cv));
      CHECK(rs.diameter_set(a) == rs.diameter_set(cv));
      for (std::size_t r = 0; r < rs.relation_count(); ++r) {
        Subset formula = rs.all();
        const std::size_t inv = *rs.inverse_of(r);
        a.for_each([&](std::size_t x) { formula &= rs.ball(x, inv); });
        CHECK(rs.center(a, r) == formula);
        CHECK(rs.center(a, r) == rs.center(cv, r));
      }
    }
  }
}

TEST_CASE("endomorphisms") {
  const RelSys c = chain2();
  CHECK(c.is_endomorphism(SelfMap::identity(2)));
  CHECK(c.is_endomorphism(SelfMap::constant(2, 1)));
  const RelSys le = RelSys::from_pairs({"0", "1"}, {{"<=", {{0, 0}, {0, 1}, {1, 1}}}});
  CHECK_FALSE(le.is_endomorphism(SelfMap{{1, 0}}));
}

TEST_CASE("minimal invariant ball sets and fixed points") {
  const RelSys c = chain2();
  CHECK(c.minimal_invariant_ballset(SelfMap::identity(2)).support == Subset::single(0));
  CHECK(c.minimal_invariant_ballset(SelfMap::constant(2, 1)).support == Subset::single(1));
  CHECK(c.fixed_point(SelfMap::identity(2)) == 0);
  CHECK(c.fixed_point(SelfMap::constant(2, 1)) == 1);

  const RelSys le = RelSys::from_pairs({"0", "1"}, {{"<=", {{0, 0}, {0, 1}, {1, 1}}}});
  CHECK_THROWS_AS(le.minimal_invariant_ballset(SelfMap::identity(2)), StructureError);
  const RelSys full = RelSys::from_pairs({"a", "b"}, {{"all", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}});
  CHECK_THROWS_AS(full.fixed_point(SelfMap{{1, 0}}), HypothesisViolation);

  oracle::Rng rng(41);
  int tested = 0;
  for (int t = 0; t < 150 && tested < 40; ++t) {
    const std::size_t n = 2 + oracle::pick(rng, 4);
    const RelSys rs = random_system(rng, n, 1 + oracle::pick(rng, 2), 0.3);
    if (!rs.has_normal_structure().normal) continue;
    ++tested;
    for (const SelfMap& f : endomorphisms(rs)) {
      const std::size_t x = rs.fixed_point(f);
      CHECK(f(x) == x);
      const BallSetMember m = rs.minimal_invariant_ballset(f);
      CHECK(f.apply(m.support).subset_of(m.support));
      CHECK(m.support.size() == 1);
      const auto rep = rs.common_fixed_points({f});
      CHECK(rep.fixed == f.fixed_points());
      CHECK(rep.certificate.ok);
      CHECK(rs.is_one_local_retract(f.fixed_points()).ok);
    }
  }
  CHECK(tested >= 20);
}

TEST_CASE("common fixed points of commuting families") {
  // diamond lattice 0 < a, b < 1 as {<=, >=}
  const RelSys d = RelSys::from_pairs(
      {"0", "a", "b", "1"},
      {{"<=", {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}},
       {">=", {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 3}}}});
  CHECK(d.common_fixed_points({SelfMap::identity(4)}).fixed == d.all());
  const SelfMap f{{1, 1, 3, 3}};
  const auto rep = d.common_fixed_points({f, compose(f, f)});
  CHECK(rep.fixed == f.fixed_points());
  CHECK_THROWS_AS(d.common_fixed_points({SelfMap{{1, 1, 3, 3}}, SelfMap{{2, 3, 2, 3}}, SelfMap{{0, 0, 0, 0}}}), InputError);
  CHECK_THROWS_AS(d.common_fixed_points({SelfMap{{1, 0, 2, 3}}}), InputError);
}

TEST_CASE("one-local retracts agree with the definition") {
  const RelSys c = chain2();
  CHECK(c.is_one_local_retract(c.all()).ok);
  CHECK(c.is_one_local_retract(Subset::single(0)).ok == olr_by_definition(c, Subset::single(0)));
  oracle::Rng rng(29);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + oracle::pick(rng, 4);
    const RelSys rs = random_system(rng, n, 1 + oracle::pick(rng, 2), 0.4);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const Subset a(bits);
      const auto rep = rs.is_one_local_retract(a);
      REQUIRE(rep.ok == olr_by_definition(rs, a));
      if (rep.ok) {
        for (std::size_t x = 0; x < n; ++x)
          if (!a.contains(x)) CHECK(extends_to_retraction(rs, a, x, rep.retraction[x]));
      } else {
        REQUIRE(rep.failing_point);
        for (std::size_t b : a.elements()) CHECK_FALSE(extends_to_retraction(rs, a, *rep.failing_point, b));
      }
      // a one-local retract of a normal system is normal in the induced structure
      if (rep.ok && rs.has_normal_structure().normal) CHECK(rs.restrict(a).has_normal_structure().normal);
    }
  }
}

TEST_CASE("descending chains of one-local retracts") {
  const RelSys c = chain2();
  CHECK(c.chain_intersection_is_olr({c.all()}));
  CHECK(c.chain_intersection_is_olr({c.all(), Subset::single(0)}));
  CHECK_THROWS_AS(c.chain_intersection_is_olr({Subset::single(0), c.all()}), InputError);
}

TEST_CASE("invariant binary relations") {
  const auto all = invariant_binary_relations(2, {SelfMap::identity(2)});
  CHECK(all.relations.size() == 16);
  const auto inv = invariant_binary_relations(3, {SelfMap{{1, 2, 0}}});
  CHECK(inv.has_diagonal);
  CHECK(inv.closed_intersection);
  CHECK(inv.closed_union);
  CHECK(inv.closed_composition);
  CHECK(inv.closed_inverse);
  bool full = false;
  for (Subset r : inv.relations) full = full || r == Subset::full(9);
  CHECK(full);
  CHECK_THROWS_AS(invariant_binary_relations(4, {SelfMap::identity(4)}), CapExceeded);
}
