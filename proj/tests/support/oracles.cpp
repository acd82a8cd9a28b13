#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool is_subword(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  for (char c : b)
    if (i < a.size() && a[i] == c) ++i;
  return i == a.size();
}

Words universe(std::size_t maxlen) {
  Words out{""};
  Words layer{""};
  for (std::size_t l = 1; l <= maxlen; ++l) {
    Words next;
    for (const auto& w : layer) {
      next.push_back(w + "+");
      next.push_back(w + "-");
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string involute(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (char& c : r) c = c == '+' ? '-' : '+';
  return r;
}

bool member(const Words& gens, const std::string& w) {
  return std::any_of(gens.begin(), gens.end(), [&](const std::string& g) { return is_subword(g, w); });
}

bool in_left_residual(const Words& q, const Words& p, const std::string& w) {
  return std::all_of(p.begin(), p.end(), [&](const std::string& g) { return member(q, g + w); });
}

bool in_right_residual(const Words& q, const Words& p, const std::string& w) {
  return std::all_of(p.begin(), p.end(), [&](const std::string& g) { return member(q, w + g); });
}

bool in_distance(const Words& p, const Words& q, const std::string& w) {
  // ↑w lies in D(p,q): q contains p.↑w and p contains q.↑w̄
  const std::string wb = involute(w);
  return std::all_of(p.begin(), p.end(), [&](const std::string& g) { return member(q, g + w); }) &&
         std::all_of(q.begin(), q.end(), [&](const std::string& g) { return member(p, g + wb); });
}

Words random_gens(Rng& rng, std::size_t maxlen, std::size_t maxgens) {
  if (pick(rng, 12) == 0) return {};
  Words out;
  const std::size_t k = 1 + pick(rng, maxgens);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t len = pick(rng, maxlen + 1);
    std::string w;
    for (std::size_t j = 0; j < len; ++j) w += pick(rng, 2) ? '+' : '-';
    out.push_back(w);
  }
  return out;
}

bool is_partial_order(const Order& o) {
  for (std::size_t x = 0; x < o.n; ++x) {
    if (!o.le[x][x]) return false;
    for (std::size_t y = 0; y < o.n; ++y) {
      if (x != y && o.le[x][y] && o.le[y][x]) return false;
      for (std::size_t z = 0; z < o.n; ++z)
        if (o.le[x][y] && o.le[y][z] && !o.le[x][z]) return false;
    }
  }
  return true;
}

bool is_complete_lattice(const Order& o) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << o.n); ++s) {
    std::vector<std::size_t> ub;
    for (std::size_t y = 0; y < o.n; ++y) {
      bool up = true;
      for (std::size_t x = 0; x < o.n; ++x)
        if ((s >> x & 1) && !o.le[x][y]) up = false;
      if (up) ub.push_back(y);
    }
    bool has_least = false;
    for (std::size_t a : ub)
      if (std::all_of(ub.begin(), ub.end(), [&](std::size_t b) { return o.le[a][b]; })) has_least = true;
    if (!has_least) return false;
  }
  return true;
}

std::vector<Order> all_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) offdiag.emplace_back(x, y);
  std::vector<Order> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag.size()); ++bits) {
    Order o{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (std::size_t x = 0; x < n; ++x) o.le[x][x] = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (bits >> k & 1) o.le[offdiag[k].first][offdiag[k].second] = true;
    if (is_partial_order(o)) out.push_back(std::move(o));
  }
  return out;
}

Order random_closure_lattice(Rng& rng, std::size_t maxn) {
  while (true) {
    const std::size_t ground = 3 + pick(rng, 2);
    const std::uint32_t full = (1u << ground) - 1;
    std::set<std::uint32_t> fam{full};
    const std::size_t seeds = pick(rng, 5);
    for (std::size_t i = 0; i < seeds; ++i) fam.insert(static_cast<std::uint32_t>(pick(rng, full + 1)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> cur(fam.begin(), fam.end());
      for (auto a : cur)
        for (auto b : cur) grew |= fam.insert(a & b).second;
    }
    if (fam.size() > maxn) continue;
    std::vector<std::uint32_t> el(fam.begin(), fam.end());
    Order o{el.size(), std::vector<std::vector<bool>>(el.size(), std::vector<bool>(el.size()))};
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = 0; j < el.size(); ++j) o.le[i][j] = (el[i] & ~el[j]) == 0;
    return o;
  }
}

bool monotone(const Order& o, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < o.n; ++x)
    for (std::size_t y = 0; y < o.n; ++y)
      if (o.le[x][y] && !o.le[f[x]][f[y]]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> all_maps(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    for (; i < n && ++f[i] == n; ++i) f[i] = 0;
    if (i == n) break;
  }
  return out;
}

int v4_join(int a, int b) {
  if (a == b) return a;
  if (a == 0) return b;
  if (b == 0) return a;
  return 3;
}

int v4_inv(int a) { return a == 1 ? 2 : a == 2 ? 1 : a; }

bool v4_leq(int a, int b) { return v4_join(a, b) == b; }

std::vector<std::vector<int>> all_v4_spaces(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<std::vector<int>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> d(n * n, 0);
    std::size_t c = code;
    for (auto [x, y] : pairs) {
      const int v = 1 + static_cast<int>(c % 3);
      c /= 3;
      d[x * n + y] = v;
      d[y * n + x] = v4_inv(v);
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        for (std::size_t z = 0; z < n && ok; ++z)
          ok = v4_leq(d[x * n + y], v4_join(d[x * n + z], d[z * n + y]));
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

Graph random_reflexive_graph(Rng& rng, std::size_t n, double density) {
  Graph g{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) g.arc[x][y] = x == y || u(rng) < density;
  return g;
}

std::set<std::pair<std::size_t, std::size_t>> zigzag_hom_endpoints(const Graph& g, const std::string& w) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> h(w.size() + 1);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == w.size()) {
      out.emplace(h[0], h[w.size()]);
      return;
    }
    for (std::size_t v = 0; v < g.n; ++v) {
      const bool ok = w[i] == '+' ? g.arc[h[i]][v] : g.arc[v][h[i]];
      if (!ok) continue;
      h[i + 1] = v;
      extend(i + 1);
    }
  };
  for (std::size_t s = 0; s < g.n; ++s) {
    h[0] = s;
    extend(0);
  }
  return out;
}

bool helly_bruteforce(const std::vector<std::uint64_t>& family) {
  const std::size_t m = family.size();
  // grow pairwise-intersecting subfamilies; an empty common part on any of them is a failure
  std::function<bool(std::size_t, std::vector<std::size_t>&, std::uint64_t)> rec =
      [&](std::size_t from, std::vector<std::size_t>& chosen, std::uint64_t inter) -> bool {
    if (!chosen.empty() && inter == 0) return false;
    for (std::size_t i = from; i < m; ++i) {
      bool pairwise = true;
      for (std::size_t j : chosen) pairwise = pairwise && (family[i] & family[j]) != 0;
      if (!pairwise) continue;
      chosen.push_back(i);
      const bool ok = rec(i + 1, chosen, inter & family[i]);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  std::vector<std::size_t> chosen;
  return rec(0, chosen, ~std::uint64_t{0});
}

}  // namespace oracle
