#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperfix/subset.hpp"

namespace hyperfix {

/// A binary relation over {0..n-1}; rows[x] is the set of y with (x, y) in the relation.
struct Relation {
  std::string name;
  std::vector<Subset> rows;

  bool contains(std::size_t x, std::size_t y) const { return rows[x].contains(y); }
  friend bool operator==(const Relation& a, const Relation& b) { return a.rows == b.rows; }
};

/// A total self-map of {0..n-1}.
struct SelfMap {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image[x]; }
  std::size_t size() const noexcept { return image.size(); }
  Subset apply(Subset a) const;
  Subset fixed_points() const;
  friend bool operator==(const SelfMap&, const SelfMap&) = default;

  static SelfMap identity(std::size_t n);
  static SelfMap constant(std::size_t n, std::size_t c);
};

/// f after g.
SelfMap compose(const SelfMap& f, const SelfMap& g);
bool commute(const SelfMap& f, const SelfMap& g);

using RelationSet = std::vector<bool>;

/// A nonempty intersection of balls with the (center, relation) pairs that produce it.
struct BallSetMember {
  Subset support;
  std::vector<std::pair<std::size_t, std::size_t>> witness;
};

struct OlrReport {
  bool ok = false;
  std::vector<std::size_t> retraction;  // x -> image in A; identity on A
  std::optional<std::size_t> failing_point;
};

struct NormalityReport {
  bool normal = true;
  std::optional<BallSetMember> counterexample;
};

struct CommonFixedReport {
  Subset fixed;
  std::size_t witness = 0;
  std::vector<Subset> stages;  // common fixed set after each map
  OlrReport certificate;
};

struct InvariantRelations {
  std::vector<Subset> relations;  // pair (x, y) encoded as bit x*n + y
  bool has_diagonal = false;
  bool closed_intersection = false;
  bool closed_union = false;
  bool closed_composition = false;
  bool closed_inverse = false;
};

class RelSys {
public:
  static constexpr std::size_t default_cap = 12;

  RelSys(std::vector<std::string> elements, std::vector<Relation> relations);
  /// Builds relations from explicit pairs of element indices.
  static RelSys from_pairs(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::vector<std::pair<std::size_t, std::size_t>>>>& rels);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t relation_count() const noexcept { return relations_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const Relation& relation(std::size_t r) const { return relations_.at(r); }
  std::size_t element_index(const std::string& name) const;
  std::size_t relation_index(const std::string& name) const;
  Subset all() const { return Subset::full(size()); }

  bool reflexive() const noexcept { return reflexive_; }
  bool involutive() const noexcept { return involutive_; }
  bool symmetric() const noexcept { return symmetric_; }
  /// Index of a relation equal to the inverse of r, if any.
  std::optional<std::size_t> inverse_of(std::size_t r) const { return inverse_[r]; }

  /// The induced system on A, elements renumbered in increasing order.
  RelSys restrict(Subset a) const;

  Subset ball(std::size_t x, std::size_t r) const;
  Subset center(Subset a, std::size_t r) const;
  Subset cov(Subset a) const;
  RelationSet diameter_set(Subset a) const;
  RelationSet radius_set(Subset a) const;
  bool is_equally_centered(Subset a) const;

  /// Balls containing a, greedily reduced; their intersection is cov(a).
  BallSetMember cover_witness(Subset a) const;
  std::vector<BallSetMember> enumerate_ball_intersections(std::size_t cap = default_cap) const;
  NormalityReport has_normal_structure(std::size_t cap = default_cap) const;

  bool is_endomorphism(const SelfMap& f) const;
  /// Retraction onto image, i.e. an idempotent endomorphism.
  bool is_retraction(const SelfMap& g) const;

  BallSetMember minimal_invariant_ballset(const SelfMap& f, std::size_t cap = default_cap) const;
  std::size_t fixed_point(const SelfMap& f, std::size_t cap = default_cap) const;
  CommonFixedReport common_fixed_points(const std::vector<SelfMap>& fs, std::size_t cap = default_cap) const;

  OlrReport is_one_local_retract(Subset a) const;
  bool chain_intersection_is_olr(const std::vector<Subset>& chain) const;

  std::string format(Subset a) const;

private:
  void check_map(const SelfMap& f) const;

  std::vector<std::string> elements_;
  std::vector<Relation> relations_;
  std::vector<std::optional<std::size_t>> inverse_;
  bool reflexive_ = true;
  bool involutive_ = true;
  bool symmetric_ = true;
};

/// All binary relations on {0..n-1} (n <= 3) preserved by every map, with the closure checks.
InvariantRelations invariant_binary_relations(std::size_t n, const std::vector<SelfMap>& fs);

}  // namespace hyperfix
