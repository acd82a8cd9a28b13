#include <doctest.h>

#include "bridge.hpp"
#include "hyperfix/error.hpp"
#include "hyperfix/upset.hpp"
#include "oracles.hpp"

using namespace hyperfix;

namespace {

UpSet up(std::initializer_list<const char*> gens) {
  std::vector<Word> ws;
  for (const char* g : gens) ws.emplace_back(g);
  return UpSet::from_generators(ws);
}

// Membership agreement with the oracle over every word of length <= L.
bool agrees(const UpSet& u, const std::function<bool(const std::string&)>& pred, std::size_t L = 6) {
  for (const auto& w : oracle::universe(L))
    if (u.contains(Word(w)) != pred(w)) return false;
  return true;
}

}  // namespace

TEST_CASE("words: validation, involution, subword order") {
  CHECK_THROWS_AS(Word("+x"), InputError);
  CHECK(Word("+--").involute() == Word("++-"));
  CHECK(Word("").involute() == Word(""));
  CHECK(is_subword(Word(""), Word("+-")));
  CHECK(is_subword(Word("+-"), Word("+--")));
  CHECK_FALSE(is_subword(Word("++"), Word("+-")));
  for (const auto& a : oracle::universe(4))
    for (const auto& b : oracle::universe(4)) CHECK(is_subword(Word(a), Word(b)) == oracle::is_subword(a, b));
  CHECK(all_words(3).size() == 15);
  CHECK(display(Word("")) == "□");
}

TEST_CASE("minimal common superwords are the minimal words above both") {
  const auto U = oracle::universe(6);
  for (const auto& a : oracle::universe(3))
    for (const auto& b : oracle::universe(3)) {
      std::vector<std::string> common;
      for (const auto& w : U)
        if (oracle::is_subword(a, w) && oracle::is_subword(b, w)) common.push_back(w);
      std::vector<std::string> minimal;
      for (const auto& w : common) {
        bool min = true;
        for (const auto& v : common) min = min && (v == w || !oracle::is_subword(v, w));
        if (min) minimal.push_back(w);
      }
      std::vector<std::string> got;
      for (const Word& w : minimal_common_superwords(Word(a), Word(b))) got.push_back(w.str());
      std::sort(minimal.begin(), minimal.end());
      std::sort(got.begin(), got.end());
      CHECK(got == minimal);
    }
}

TEST_CASE("canonical antichain and membership") {
  CHECK(up({"+", "++"}) == up({"+"}));
  CHECK(up({"+-", "-+"}).generators().size() == 2);
  CHECK(UpSet::from_generators({}).is_top());
  CHECK(member(Word("+-"), up({"+"})));
  CHECK(member(Word(""), UpSet::zero()));
  CHECK_FALSE(member(Word("--"), up({"+"})));
  CHECK(up({"-", "+"}).to_string() == "+,-");
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_gens(rng, 4, 4);
    const UpSet u = bridge::upset(g);
    CHECK(agrees(u, [&](const std::string& w) { return oracle::member(g, w); }));
    for (std::size_t a = 0; a < u.generators().size(); ++a)
      for (std::size_t b = 0; b < u.generators().size(); ++b)
        if (a != b) CHECK_FALSE(is_subword(u.generators()[a], u.generators()[b]));
  }
}

TEST_CASE("lattice operations, concatenation, involution") {
  CHECK(meet(up({"+"}), up({"-"})) == up({"+", "-"}));
  CHECK(join(up({"+"}), up({"-"})) == up({"+-", "-+"}));
  CHECK(join(up({"+"}), UpSet::top()).is_top());
  CHECK(concat(up({"+"}), up({"-"})) == up({"+-"}));
  CHECK(concat(UpSet::zero(), up({"+-", "--"})) == up({"+-", "--"}));
  CHECK(concat(up({"+"}), UpSet::top()).is_top());
  CHECK(involute(up({"+--"})) == up({"++-"}));
  CHECK(involute(UpSet::zero()) == UpSet::zero());
  CHECK(leq(UpSet::zero(), up({"+-"})));
  CHECK(leq(up({"+"}), up({"++"})));
  CHECK_FALSE(leq(up({"+"}), up({"-"})));
  CHECK(leq(up({"-"}), UpSet::top()));

  oracle::Rng rng(5);
  for (int i = 0; i < 150; ++i) {
    const auto a = oracle::random_gens(rng, 3, 3), b = oracle::random_gens(rng, 3, 3), c = oracle::random_gens(rng, 2, 2);
    const UpSet A = bridge::upset(a), B = bridge::upset(b), C = bridge::upset(c);
    CHECK(agrees(meet(A, B), [&](const std::string& w) { return oracle::member(a, w) || oracle::member(b, w); }));
    CHECK(agrees(join(A, B), [&](const std::string& w) { return oracle::member(a, w) && oracle::member(b, w); }));
    // w is in the concatenation iff some split puts a prefix in A and the rest in B
    CHECK(agrees(concat(A, B), [&](const std::string& w) {
      for (std::size_t k = 0; k <= w.size(); ++k)
        if (oracle::member(a, w.substr(0, k)) && oracle::member(b, w.substr(k))) return true;
      return false;
    }));
    CHECK(involute(concat(A, B)) == concat(involute(B), involute(A)));
    CHECK(involute(involute(A)) == A);
    // meet distributes over concatenation
    CHECK(concat(meet(A, B), C) == meet(concat(A, C), concat(B, C)));
    CHECK(concat(C, meet(A, B)) == meet(concat(C, A), concat(C, B)));
  }
}

TEST_CASE("residuals") {
  CHECK(left_residual(up({"++"}), up({"+"})) == up({"+"}));
  CHECK(right_residual(up({"++"}), up({"+"})) == up({"+"}));
  const UpSet U = up({"+-", "-"});
  CHECK(left_residual(U, UpSet::zero()) == U);
  CHECK(right_residual(U, UpSet::zero()) == U);
  CHECK(left_residual(UpSet::zero(), up({"+"})) == UpSet::zero());

  oracle::Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto q = oracle::random_gens(rng, 3, 2), p = oracle::random_gens(rng, 3, 2);
    const UpSet Q = bridge::upset(q), P = bridge::upset(p);
    const UpSet R = left_residual(Q, P);
    CHECK(agrees(R, [&](const std::string& w) { return oracle::in_left_residual(q, p, w); }));
    CHECK(agrees(right_residual(Q, P), [&](const std::string& w) { return oracle::in_right_residual(q, p, w); }));
    CHECK(leq(Q, concat(P, R)));
    CHECK(right_residual(Q, P) == involute(left_residual(involute(Q), involute(P))));
    CHECK(left_residual_by_enumeration(Q, P) == R);
  }
}

TEST_CASE("canonical distance") {
  const UpSet U = up({"+-", "-"});
  CHECK(distance(U, U) == UpSet::zero());
  CHECK(distance(up({"+"}), up({"++"})) == up({"+"}));
  oracle::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const auto p = oracle::random_gens(rng, 3, 2), q = oracle::random_gens(rng, 3, 2);
    const UpSet P = bridge::upset(p), Q = bridge::upset(q);
    CHECK(agrees(distance(P, Q), [&](const std::string& w) { return oracle::in_distance(p, q, w); }));
    CHECK(distance(P, Q) == involute(distance(Q, P)));
  }
}

TEST_CASE("cones and the MacNeille test") {
  const std::vector<Word> plus{Word("+")};
  CHECK(lower_cone(plus) == std::vector<Word>{Word(""), Word("+")});
  const std::vector<Word> e{Word("")};
  CHECK(upper_cone(e) == UpSet::zero());
  const std::vector<Word> pm{Word("+-"), Word("-+")};
  CHECK(lower_cone(pm) == std::vector<Word>{Word(""), Word("+"), Word("-")});
  CHECK(in_macneille(up({"+"})));
  CHECK(in_macneille(UpSet::zero()));
  CHECK(in_macneille(UpSet::top()));
  // brute force: the cone closure over the word universe
  const auto words = oracle::universe(6);
  oracle::Rng rng(3);
  for (int i = 0; i < 120; ++i) {
    auto g = oracle::random_gens(rng, 3, 3);
    if (g.empty()) continue;
    std::vector<std::string> lower;
    for (const auto& w : oracle::universe(3))
      if (std::all_of(g.begin(), g.end(), [&](const std::string& x) { return oracle::is_subword(w, x); })) lower.push_back(w);
    // the closure is the set of words above every element of the lower cone
    bool closed = true;
    for (const auto& w : words) {
      const bool above = std::all_of(lower.begin(), lower.end(), [&](const std::string& l) { return oracle::is_subword(l, w); });
      if (above != oracle::member(g, w)) closed = false;
    }
    CHECK(in_macneille(bridge::upset(g)) == closed);
  }
}

TEST_CASE("accessibility witnesses") {
  const auto r = accessibility_witness(up({"+"}));
  REQUIRE(r);
  CHECK(*r == up({"-"}));
  CHECK_FALSE(accessibility_witness(UpSet::zero()));
  CHECK_FALSE(accessibility_witness(UpSet::top()));
  CHECK_THROWS_AS(accessibility_witness(up({"+", "-"})), StructureError);
  CHECK_FALSE(in_macneille(up({"+", "-"})));
}

TEST_CASE("parsing") {
  CHECK(UpSet::parse("top").is_top());
  CHECK(UpSet::parse("□") == UpSet::zero());
  CHECK(UpSet::parse("+,-") == up({"+", "-"}));
}
