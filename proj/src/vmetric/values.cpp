#include <set>

#include "hyperfix/vspace.hpp"

namespace hyperfix {

std::vector<Value> value_set(const VSpace<TableMonoid>& s) { return s.monoid().carrier(); }

std::vector<UpSet> closed_value_set(const VSpace<WordMonoid>& s, const ClosureOptions& opt) {
  std::size_t maxlen = opt.maxlen;
  if (maxlen == 0)
    for (const UpSet& v : s.matrix()) maxlen = std::max(maxlen, v.max_generator_length());

  std::set<UpSet> vals{UpSet::zero(), UpSet::top()};
  vals.insert(s.matrix().begin(), s.matrix().end());
  auto admit = [&](std::set<UpSet>& into, UpSet v) {
    if (v.max_generator_length() <= maxlen) into.insert(std::move(v));
    if (into.size() > opt.cap)
      throw CapExceeded("closed value set exceeds " + std::to_string(opt.cap) + " values");
  };
  for (bool grew = true; grew;) {
    std::set<UpSet> next = vals;
    for (const UpSet& a : vals) {
      admit(next, involute(a));
      for (const UpSet& b : vals) {
        if (opt.products) admit(next, concat(a, b));
        if (opt.joins) admit(next, join(a, b));
        if (opt.meets) admit(next, meet(a, b));
      }
    }
    grew = next.size() != vals.size();
    vals = std::move(next);
  }
  return {vals.begin(), vals.end()};
}

std::vector<UpSet> value_set(const VSpace<WordMonoid>& s) { return closed_value_set(s); }

}  // namespace hyperfix
