#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperfix/monoid.hpp"
#include "hyperfix/relsys.hpp"
#include "hyperfix/subset.hpp"
#include "hyperfix/upset.hpp"
#include "hyperfix/vspace.hpp"

namespace hyperfix {

class Digraph {
public:
  Digraph(std::vector<std::string> vertices, std::vector<Subset> out);
  static Digraph from_arcs(std::vector<std::string> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                           bool add_loops);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  bool arc(std::size_t x, std::size_t y) const { return out_[x].contains(y); }
  Subset out(std::size_t x) const { return out_[x]; }
  Subset in(std::size_t x) const { return in_[x]; }
  bool reflexive() const noexcept { return reflexive_; }
  /// No pair of opposite arcs between distinct vertices.
  bool oriented() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;
  std::size_t vertex_index(const std::string& name) const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

private:
  std::vector<std::string> vertices_;
  std::vector<Subset> out_, in_;
  bool reflexive_ = true;
};

Digraph zigzag_from_word(const Word& u);
/// Inverse of zigzag_from_word up to reversal; returns the smaller of ev and its involute.
/// Throws StructureError if the graph is not a reflexive oriented zigzag.
Word word_from_zigzag(const Digraph& g);

/// Vertices reachable from s by one step along arcs ('+') or against them ('-').
Subset step(const Digraph& g, Subset s, char letter);
/// Whether the zigzag of w maps into g sending its ends to x and y. Requires g reflexive.
bool zz_member(const Digraph& g, std::size_t x, std::size_t y, const Word& w);

struct ZzDistance {
  UpSet value;
  bool complete = true;  // false when maxlen cut the search short
};
/// Minimal words of the zigzag distance. Minimal words have length < |V|, so maxlen = 0 (default) is exact.
ZzDistance zz_generators(const Digraph& g, std::size_t x, std::size_t y, std::size_t maxlen = 0);

struct ZigzagSpace {
  VSpace<WordMonoid> space;
  bool complete = true;
};
ZigzagSpace zigzag_space(const Digraph& g, std::size_t maxlen = 0);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

bool is_graph_homomorphism(const Digraph& g, const Digraph& h, const VMap& f);

struct HomCheck {
  bool homomorphism = false;
  bool nonexpansive = false;
};
HomCheck graph_hom_iff_nonexpansive_check(const VMap& f, const Digraph& g, const Digraph& h);

struct MacNeilleCheck {
  Verdict verdict = Verdict::yes;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};
MacNeilleCheck values_in_macneille(const Digraph& g, std::size_t maxlen = 0);

/// Distance between vertices i and j of the zigzag of u.
UpSet zigzag_distance(const Word& u, std::size_t i, std::size_t j);

struct ZigzagEmbedding {
  std::vector<Word> factors;
  std::vector<std::vector<std::size_t>> coords;  // coords[v][k] = image of vertex v in factor k
  bool verified = false;
  std::optional<std::string> caveat;
};
/// Embeds g into a product of zigzags, one factor per pair (x, y) and nonempty word in the lower cone of d(x, y).
/// Throws HypothesisViolation if some distance is not a MacNeille element.
ZigzagEmbedding embed_into_zigzag_product(const Digraph& g, std::size_t factor_cap = 4096);

struct ClaimEmbedding {
  std::vector<UpSet> images;  // images[i] = up-set of the prefix of length i
  bool verified = false;
};
ClaimEmbedding claim_zigzag_embedding(const Word& u);

Digraph product(const Digraph& g, const Digraph& h);
Digraph product(const std::vector<Digraph>& gs);

struct ZigzagDemoResult {
  Subset fixed;
  std::size_t witness = 0;
  std::string route;  // "retract" or "direct"
};
/// Retract route: g is a retract of the product of the zigzags of `factors` via s and r.
ZigzagDemoResult zigzag_fixed_point_demo_retract(const Digraph& g, const std::vector<Word>& factors, const VMap& s,
                                                 const VMap& r, const std::vector<SelfMap>& fs);
/// Direct route: g is checked bounded and hyperconvex on its closed value set.
ZigzagDemoResult zigzag_fixed_point_demo_direct(const Digraph& g, const std::vector<SelfMap>& fs);

std::string to_dot(const Digraph& g, const std::string& name = "G");

}  // namespace hyperfix
