#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperfix/monoid.hpp"
#include "hyperfix/relsys.hpp"
#include "hyperfix/subset.hpp"
#include "hyperfix/vspace.hpp"
#include "hyperfix/word.hpp"

namespace hyperfix {

/// A finite partial order; up(x) = {y : x <= y}.
class Poset {
public:
  /// Throws InputError unless `up` describes a reflexive, antisymmetric, transitive relation.
  Poset(std::vector<std::string> elements, std::vector<Subset> up);
  /// Order generated by the given pairs (a, b) meaning a < b.
  static Poset from_covers(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  Subset up(std::size_t x) const { return up_[x]; }
  Subset down(std::size_t x) const { return down_[x]; }
  const std::vector<Subset>& up_rows() const noexcept { return up_; }
  Subset all() const { return Subset::full(size()); }

  Subset upper_bounds(Subset a) const;
  Subset lower_bounds(Subset a) const;
  std::optional<std::size_t> least(Subset a) const;
  std::optional<std::size_t> greatest(Subset a) const;
  std::optional<std::size_t> sup(Subset a) const { return least(upper_bounds(a)); }
  std::optional<std::size_t> inf(Subset a) const { return greatest(lower_bounds(a)); }
  std::optional<std::size_t> bottom() const { return least(all()); }
  std::optional<std::size_t> top() const { return greatest(all()); }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Relational system with the order and its inverse.
  RelSys relsys() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

private:
  std::vector<std::string> elements_;
  std::vector<Subset> up_, down_;
};

VSpace<TableMonoid> poset_to_vspace(const Poset& p);
/// x <= y iff d(x, y) <= +; the space must be over V4 and satisfy the axioms.
Poset vspace_to_poset(const VSpace<TableMonoid>& s);

bool is_order_preserving(const Poset& p, const SelfMap& f);
bool is_order_preserving(const Poset& p, const Poset& q, const VMap& f);

struct LatticeReport {
  bool ok = true;
  std::optional<Subset> witness;  // a subset lacking a supremum or an infimum
  std::string missing;            // "sup" or "inf"
};
LatticeReport is_complete_lattice(const Poset& p);

struct Gap {
  Subset a, b;
  friend bool operator==(const Gap&, const Gap&) = default;
};
bool is_gap(const Poset& p, const Gap& g);
/// Every (A, upper bounds of A) that is a gap, i.e. every A without a supremum; needs |P| <= cap.
std::vector<Gap> find_gaps(const Poset& p, std::size_t cap = 8);
/// A minimal subgap obtained by greedily dropping elements; nullopt if g is not a gap.
std::optional<Gap> finite_subgap(const Poset& p, const Gap& g);
bool has_finite_subgap(const Poset& p, const Gap& g);
/// The hole taking + on A, - on B and 1 elsewhere.
std::vector<Value> hole_from_gap(const Poset& p, const Gap& g);

/// Every nonempty chain has a supremum and an infimum (enumerated; |P| <= 20).
bool is_chain_complete(const Poset& p);

struct TarskiResult {
  Subset fixed;           // from the relational solver
  std::size_t witness = 0;
  std::size_t least = 0;  // least common fixed point by direct iteration from the bottom
};
TarskiResult tarski_common_fixed_points(const Poset& p, const std::vector<SelfMap>& fs);

std::size_t abian_brown_fixed_point(const Poset& p, const SelfMap& f);

/// Fence whose i-th comparability is x_i < x_{i+1} for '+' and x_i > x_{i+1} for '-'; letters must alternate.
Poset make_fence(const Word& orientation);
Poset product(const Poset& p, const Poset& q);
Poset product(const std::vector<Poset>& ps);

struct FenceDemoResult {
  Subset fixed;
  std::size_t witness = 0;
  std::size_t product_size = 0;
};
/// Checks that q is a retract of the product of the given fences via s: q -> product and r: product -> q,
/// then solves for common fixed points of fs on q through its zigzag distance.
FenceDemoResult fence_product_retract_demo(const Poset& q, const std::vector<Word>& fences, const VMap& s,
                                           const VMap& r, const std::vector<SelfMap>& fs);

/// All posets on n labeled points, or one per isomorphism class (n <= 7).
std::vector<Poset> enumerate_posets(std::size_t n, bool up_to_iso);

}  // namespace hyperfix
