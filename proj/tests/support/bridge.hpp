#pragma once

// Conversions between oracle structures and library types.

#include <string>
#include <vector>

#include "hyperfix/poset.hpp"
#include "hyperfix/upset.hpp"
#include "hyperfix/vspace.hpp"
#include "hyperfix/zigzag.hpp"
#include "oracles.hpp"

namespace bridge {

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline hyperfix::UpSet upset(const oracle::Words& gens) {
  std::vector<hyperfix::Word> ws;
  for (const auto& g : gens) ws.emplace_back(g);
  return hyperfix::UpSet::from_generators(std::move(ws));
}

inline hyperfix::Poset poset(const oracle::Order& o) {
  std::vector<hyperfix::Subset> up(o.n);
  for (std::size_t x = 0; x < o.n; ++x)
    for (std::size_t y = 0; y < o.n; ++y)
      if (o.le[x][y]) up[x].insert(y);
  return hyperfix::Poset(names(o.n), std::move(up));
}

inline hyperfix::VSpace<hyperfix::TableMonoid> v4_space(const std::vector<int>& d, std::size_t n) {
  std::vector<hyperfix::Value> dist;
  for (int v : d) dist.push_back(hyperfix::Value{static_cast<std::uint16_t>(v)});
  return hyperfix::VSpace<hyperfix::TableMonoid>(names(n), hyperfix::TableMonoid::v4(), std::move(dist));
}

inline hyperfix::Digraph digraph(const oracle::Graph& g) {
  std::vector<hyperfix::Subset> out(g.n);
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      if (g.arc[x][y]) out[x].insert(y);
  return hyperfix::Digraph(names(g.n), std::move(out));
}

inline hyperfix::SelfMap selfmap(const std::vector<std::size_t>& f) { return hyperfix::SelfMap{f}; }

}  // namespace bridge
