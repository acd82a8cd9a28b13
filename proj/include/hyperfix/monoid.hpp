#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperfix/upset.hpp"

namespace hyperfix {

template <class M>
concept ValueMonoid = requires(const M& m, const typename M::value_type& a, const std::string& s) {
  { m.zero() } -> std::convertible_to<typename M::value_type>;
  { m.top() } -> std::convertible_to<typename M::value_type>;
  { m.oplus(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.involute(a) } -> std::convertible_to<typename M::value_type>;
  { m.leq(a, a) } -> std::convertible_to<bool>;
  { m.meet(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.join(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.distance(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.name(a) } -> std::convertible_to<std::string>;
  { m.parse(s) } -> std::convertible_to<typename M::value_type>;
  { a < a } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

/// Index of a value in a TableMonoid carrier.
struct Value {
  std::uint16_t id = 0;
  friend auto operator<=>(Value, Value) = default;
};

/// A finite involutive ordered monoid given by tables.
class TableMonoid {
public:
  using value_type = Value;

  /// `order` lists pairs (a, b) with a <= b; the reflexive-transitive closure is taken.
  /// Throws InputError unless the order is a lattice and the tables have the right shape.
  TableMonoid(std::string id, std::vector<std::string> names, std::vector<std::vector<std::size_t>> oplus,
              std::vector<std::size_t> involution, const std::vector<std::pair<std::size_t, std::size_t>>& order);

  static TableMonoid v4();

  const std::string& id() const noexcept { return id_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::vector<Value> carrier() const;

  Value zero() const { return zero_; }
  Value top() const { return top_; }
  Value oplus(Value a, Value b) const { return Value{op_[a.id][b.id]}; }
  Value involute(Value a) const { return Value{inv_[a.id]}; }
  bool leq(Value a, Value b) const { return le_[a.id][b.id]; }
  Value meet(Value a, Value b) const { return Value{meet_[a.id][b.id]}; }
  Value join(Value a, Value b) const { return Value{join_[a.id][b.id]}; }
  /// Least element of {r : p <= q + r̄ and q <= p + r}; throws StructureError if it does not exist.
  Value distance(Value p, Value q) const;
  std::string name(Value a) const { return names_.at(a.id); }
  Value parse(const std::string& s) const;

  /// Axioms of an involutive ordered monoid that fail for this table (empty when valid).
  std::vector<std::string> validate() const;
  /// Meets distribute over the monoid operation (finite form of the Heyting condition).
  bool distributive() const;

private:
  std::string id_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint16_t>> op_, meet_, join_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::vector<bool>> le_;
  std::vector<std::vector<std::optional<std::uint16_t>>> dist_;
  Value zero_, top_;
};

/// The word algebra of final segments as a value monoid.
struct WordMonoid {
  using value_type = UpSet;

  UpSet zero() const { return UpSet::zero(); }
  UpSet top() const { return UpSet::top(); }
  UpSet oplus(const UpSet& a, const UpSet& b) const { return concat(a, b); }
  UpSet involute(const UpSet& a) const { return hyperfix::involute(a); }
  bool leq(const UpSet& a, const UpSet& b) const { return hyperfix::leq(a, b); }
  UpSet meet(const UpSet& a, const UpSet& b) const { return hyperfix::meet(a, b); }
  UpSet join(const UpSet& a, const UpSet& b) const { return hyperfix::join(a, b); }
  UpSet distance(const UpSet& a, const UpSet& b) const { return hyperfix::distance(a, b); }
  std::string name(const UpSet& a) const { return a.to_string(); }
  UpSet parse(const std::string& s) const { return UpSet::parse(s); }
  std::string id() const { return "word-algebra"; }
};

}  // namespace hyperfix
