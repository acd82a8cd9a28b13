#include "hyperfix/monoid.hpp"

#include <algorithm>

#include "hyperfix/error.hpp"

namespace hyperfix {

TableMonoid::TableMonoid(std::string id, std::vector<std::string> names, std::vector<std::vector<std::size_t>> oplus,
                         std::vector<std::size_t> involution,
                         const std::vector<std::pair<std::size_t, std::size_t>>& order)
    : id_(std::move(id)), names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("monoid carrier is empty");
  if (n > 256) throw CapExceeded("monoid tables are limited to 256 values");
  if (oplus.size() != n || involution.size() != n) throw InputError("monoid tables have the wrong size");
  op_.assign(n, std::vector<std::uint16_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (oplus[a].size() != n) throw InputError("monoid oplus row has the wrong size");
    for (std::size_t b = 0; b < n; ++b) {
      if (oplus[a][b] >= n) throw InputError("monoid oplus entry out of range");
      op_[a][b] = static_cast<std::uint16_t>(oplus[a][b]);
    }
  }
  for (std::size_t v : involution) {
    if (v >= n) throw InputError("monoid involution entry out of range");
    inv_.push_back(static_cast<std::uint16_t>(v));
  }

  le_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) le_[a][a] = true;
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw InputError("monoid order pair out of range");
    le_[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (le_[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (le_[k][b]) le_[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le_[a][b] && le_[b][a]) throw InputError("monoid order is not antisymmetric at " + names_[a] + ", " + names_[b]);

  meet_.assign(n, std::vector<std::uint16_t>(n));
  join_.assign(n, std::vector<std::uint16_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> lub, glb;
      for (std::size_t c = 0; c < n; ++c) {
        bool least_upper = le_[a][c] && le_[b][c];
        bool greatest_lower = le_[c][a] && le_[c][b];
        for (std::size_t e = 0; e < n && (least_upper || greatest_lower); ++e) {
          if (least_upper && le_[a][e] && le_[b][e] && !le_[c][e]) least_upper = false;
          if (greatest_lower && le_[e][a] && le_[e][b] && !le_[e][c]) greatest_lower = false;
        }
        if (least_upper) lub = c;
        if (greatest_lower) glb = c;
      }
      if (!lub || !glb) throw InputError("monoid order is not a lattice at " + names_[a] + ", " + names_[b]);
      join_[a][b] = static_cast<std::uint16_t>(*lub);
      meet_[a][b] = static_cast<std::uint16_t>(*glb);
    }
  std::uint16_t lo = 0, hi = 0;
  for (std::uint16_t a = 1; a < n; ++a) {
    lo = meet_[lo][a];
    hi = join_[hi][a];
  }
  zero_ = Value{lo};
  top_ = Value{hi};

  dist_.assign(n, std::vector<std::optional<std::uint16_t>>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::size_t> d;
      for (std::size_t r = 0; r < n; ++r)
        if (le_[p][op_[q][inv_[r]]] && le_[q][op_[p][r]]) d.push_back(r);
      for (std::size_t r : d)
        if (std::all_of(d.begin(), d.end(), [&](std::size_t s) { return le_[r][s]; }))
          dist_[p][q] = static_cast<std::uint16_t>(r);
    }
}

TableMonoid TableMonoid::v4() {
  // 0 < +, - < 1 with + and - incomparable; the operation is the join.
  std::vector<std::vector<std::size_t>> join_table = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  return TableMonoid("V4", {"0", "+", "-", "1"}, join_table, {0, 2, 1, 3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

std::vector<Value> TableMonoid::carrier() const {
  std::vector<Value> out;
  for (std::size_t a = 0; a < size(); ++a) out.push_back(Value{static_cast<std::uint16_t>(a)});
  return out;
}

Value TableMonoid::distance(Value p, Value q) const {
  const auto& d = dist_[p.id][q.id];
  if (!d) throw StructureError("monoid " + id_ + " has no least distance value for (" + name(p) + ", " + name(q) + ")");
  return Value{*d};
}

Value TableMonoid::parse(const std::string& s) const {
  const std::string key = s == "−" ? "-" : s;
  for (std::size_t a = 0; a < size(); ++a)
    if (names_[a] == key) return Value{static_cast<std::uint16_t>(a)};
  throw InputError("unknown value '" + s + "' for monoid " + id_);
}

std::vector<std::string> TableMonoid::validate() const {
  std::vector<std::string> problems;
  const auto vals = carrier();
  for (Value a : vals) {
    if (oplus(zero_, a) != a || oplus(a, zero_) != a) problems.push_back("least element is not neutral at " + name(a));
    if (involute(involute(a)) != a) problems.push_back("involution does not have period 2 at " + name(a));
    for (Value b : vals) {
      if (leq(a, b) != leq(involute(a), involute(b))) problems.push_back("involution is not an order automorphism");
      if (involute(oplus(a, b)) != oplus(involute(b), involute(a)))
        problems.push_back("involution does not reverse the operation at " + name(a) + ", " + name(b));
      for (Value c : vals) {
        if (oplus(oplus(a, b), c) != oplus(a, oplus(b, c)))
          problems.push_back("operation is not associative at " + name(a) + ", " + name(b) + ", " + name(c));
        if (leq(a, b) && (!leq(oplus(a, c), oplus(b, c)) || !leq(oplus(c, a), oplus(c, b))))
          problems.push_back("operation is not monotone at " + name(a) + ", " + name(b) + ", " + name(c));
      }
    }
  }
  std::sort(problems.begin(), problems.end());
  problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
  return problems;
}

bool TableMonoid::distributive() const {
  const auto vals = carrier();
  for (Value a : vals)
    for (Value b : vals)
      for (Value c : vals)
        if (oplus(a, meet(b, c)) != meet(oplus(a, b), oplus(a, c)) ||
            oplus(meet(b, c), a) != meet(oplus(b, a), oplus(c, a)))
          return false;
  return true;
}

}  // namespace hyperfix
