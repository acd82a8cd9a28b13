#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfix/word.hpp"

namespace hyperfix {

/// A final segment of the subword order on {+,-}*, stored as its minimal antichain of generators.
///
/// Values are ordered by reverse inclusion: the generator set {□} is the whole
/// word set (the least element 0) and the empty generator set is the empty
/// final segment (the top element).
class UpSet {
public:
  /// The top element (empty final segment).
  UpSet() = default;

  static UpSet top() { return UpSet(); }
  static UpSet zero() { return principal(Word()); }
  static UpSet principal(Word w);
  /// Reduces to the canonical antichain.
  static UpSet from_generators(std::vector<Word> words);

  const std::vector<Word>& generators() const noexcept { return gens_; }
  bool is_top() const noexcept { return gens_.empty(); }
  bool is_zero() const noexcept { return gens_.size() == 1 && gens_.front().empty(); }
  bool is_principal() const noexcept { return gens_.size() == 1; }
  bool contains(const Word& w) const;
  std::size_t max_generator_length() const noexcept;

  /// "top", or the generators joined with ',' ("" for 0).
  std::string to_string() const;
  /// Inverse of to_string.
  static UpSet parse(std::string_view text);

  friend bool operator==(const UpSet&, const UpSet&) = default;
  friend auto operator<=>(const UpSet&, const UpSet&) = default;

private:
  std::vector<Word> gens_;
};

/// Minimal elements of `words` under the subword order, sorted.
UpSet canonical_antichain(std::vector<Word> words);

bool member(const Word& w, const UpSet& u);

/// Infimum in the monoid order (union of final segments).
UpSet meet(const UpSet& u, const UpSet& w);
/// Supremum in the monoid order (intersection of final segments).
UpSet join(const UpSet& u, const UpSet& w);
UpSet concat(const UpSet& u, const UpSet& w);
UpSet involute(const UpSet& u);
/// u <= w in the monoid order, i.e. u contains w as a set.
bool leq(const UpSet& u, const UpSet& w);

/// Least r with q <= p (+) r: the largest final segment R with p.R contained in q.
UpSet left_residual(const UpSet& q, const UpSet& p);
/// Least r with q <= r (+) p.
UpSet right_residual(const UpSet& q, const UpSet& p);
/// Same value as left_residual, computed by enumerating candidate generators by length up to
/// |generators(p)| * maxlen(generators(q)). Throws CapExceeded past `max_bound`.
UpSet left_residual_by_enumeration(const UpSet& q, const UpSet& p, std::size_t max_bound = 14);

/// The canonical distance on the word algebra: least r with p <= q (+) r̄ and q <= p (+) r.
UpSet distance(const UpSet& p, const UpSet& q);

/// Words below every member of X. Requires X nonempty (the lower cone of the empty set is infinite).
std::vector<Word> lower_cone(std::span<const Word> xs);
/// Words above every member of Y; the upper cone of the empty set is 0.
UpSet upper_cone(std::span<const Word> ys);

/// True iff u is an upper cone, i.e. u equals the upper cone of its lower cone.
bool in_macneille(const UpSet& u);

/// Maximal elements of the lower cone of u (the generating antichain of its initial segment).
/// Requires u != top.
std::vector<Word> lower_cone_maxima(const UpSet& u);

/// For v in the completion other than 0 and top, some r with v not <= r and v <= r (+) r̄.
/// Returns nullopt for 0 and top (inaccessible); throws StructureError if v is not an upper cone.
std::optional<UpSet> accessibility_witness(const UpSet& v);

}  // namespace hyperfix
