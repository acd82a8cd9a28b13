#include "hyperfix/upset.hpp"

#include <algorithm>
#include <numeric>

#include "hyperfix/error.hpp"

namespace hyperfix {

UpSet canonical_antichain(std::vector<Word> words) { return UpSet::from_generators(std::move(words)); }

UpSet UpSet::principal(Word w) {
  UpSet u;
  u.gens_.push_back(std::move(w));
  return u;
}

UpSet UpSet::from_generators(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  UpSet u;
  for (Word& w : words)
    if (std::none_of(u.gens_.begin(), u.gens_.end(), [&](const Word& k) { return is_subword(k, w); }))
      u.gens_.push_back(std::move(w));
  std::sort(u.gens_.begin(), u.gens_.end());
  return u;
}

bool UpSet::contains(const Word& w) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Word& g) { return is_subword(g, w); });
}

std::size_t UpSet::max_generator_length() const noexcept {
  std::size_t m = 0;
  for (const Word& g : gens_) m = std::max(m, g.size());
  return m;
}

std::string UpSet::to_string() const {
  if (is_top()) return "top";
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ',';
    out += gens_[i].str();
  }
  return out;
}

UpSet UpSet::parse(std::string_view text) {
  if (text == "top") return top();
  std::vector<Word> words;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    words.emplace_back(piece == "□" ? std::string_view() : piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_generators(std::move(words));
}

bool member(const Word& w, const UpSet& u) { return u.contains(w); }

UpSet meet(const UpSet& u, const UpSet& w) {
  std::vector<Word> all = u.generators();
  all.insert(all.end(), w.generators().begin(), w.generators().end());
  return UpSet::from_generators(std::move(all));
}

UpSet join(const UpSet& u, const UpSet& w) {
  std::vector<Word> all;
  for (const Word& a : u.generators())
    for (const Word& b : w.generators()) {
      auto sup = minimal_common_superwords(a, b);
      all.insert(all.end(), sup.begin(), sup.end());
    }
  return UpSet::from_generators(std::move(all));
}

UpSet concat(const UpSet& u, const UpSet& w) {
  std::vector<Word> all;
  for (const Word& a : u.generators())
    for (const Word& b : w.generators()) all.push_back(a + b);
  return UpSet::from_generators(std::move(all));
}

UpSet involute(const UpSet& u) {
  std::vector<Word> all;
  for (const Word& g : u.generators()) all.push_back(g.involute());
  return UpSet::from_generators(std::move(all));
}

bool leq(const UpSet& u, const UpSet& w) {
  return std::all_of(w.generators().begin(), w.generators().end(), [&](const Word& g) { return u.contains(g); });
}

UpSet left_residual(const UpSet& q, const UpSet& p) {
  // s embeds into g.w iff the part of s left over after greedily matching inside g embeds into w.
  UpSet r = UpSet::zero();
  for (const Word& g : p.generators()) {
    std::vector<Word> rests;
    for (const Word& s : q.generators()) rests.push_back(s.substr(embedded_prefix_length(s, g)));
    r = join(r, UpSet::from_generators(std::move(rests)));
  }
  return r;
}

UpSet right_residual(const UpSet& q, const UpSet& p) { return involute(left_residual(involute(q), involute(p))); }

UpSet left_residual_by_enumeration(const UpSet& q, const UpSet& p, std::size_t max_bound) {
  const std::size_t bound = p.generators().size() * q.max_generator_length();
  if (bound > max_bound)
    throw CapExceeded("residual enumeration bound " + std::to_string(bound) + " exceeds " + std::to_string(max_bound));
  std::vector<Word> found;
  for (const Word& w : all_words(bound)) {
    if (std::any_of(found.begin(), found.end(), [&](const Word& f) { return is_subword(f, w); })) continue;
    const bool ok = std::all_of(p.generators().begin(), p.generators().end(),
                                [&](const Word& g) { return q.contains(g + w); });
    if (ok) found.push_back(w);
  }
  return UpSet::from_generators(std::move(found));
}

UpSet distance(const UpSet& p, const UpSet& q) { return join(involute(left_residual(p, q)), left_residual(q, p)); }

std::vector<Word> lower_cone(std::span<const Word> xs) {
  if (xs.empty()) throw InputError("lower cone of the empty set is infinite");
  std::vector<Word> out;
  for (const Word& s : subwords(xs.front()))
    if (std::all_of(xs.begin() + 1, xs.end(), [&](const Word& x) { return is_subword(s, x); })) out.push_back(s);
  return out;
}

UpSet upper_cone(std::span<const Word> ys) {
  UpSet u = UpSet::zero();
  for (const Word& y : ys) u = join(u, UpSet::principal(y));
  return u;
}

bool in_macneille(const UpSet& u) {
  if (u.is_top()) return true;
  const auto cone = lower_cone(u.generators());
  return upper_cone(cone) == u;
}

std::vector<Word> lower_cone_maxima(const UpSet& u) {
  const auto cone = lower_cone(u.generators());
  std::vector<Word> out;
  for (const Word& c : cone)
    if (std::none_of(cone.begin(), cone.end(), [&](const Word& d) { return d != c && is_subword(c, d); }))
      out.push_back(c);
  return out;
}

namespace {

UpSet flip_last(const Word& u) {
  Word f = u.substr(0, u.size() - 1) + flip(u[u.size() - 1]);
  return UpSet::principal(std::move(f));
}

bool witnesses(const UpSet& v, const UpSet& r) { return !leq(v, r) && leq(v, concat(r, involute(r))); }

}  // namespace

std::optional<UpSet> accessibility_witness(const UpSet& v) {
  if (!in_macneille(v)) throw StructureError("not a MacNeille element: " + v.to_string());
  if (v.is_top() || v.is_zero()) return std::nullopt;
  const auto ys = lower_cone_maxima(v);
  if (ys.size() == 1) {
    UpSet r = flip_last(ys.front());
    if (!witnesses(v, r)) throw InternalError("accessibility witness failed for " + v.to_string());
    return r;
  }
  // v is the join of the principal cones of ys; split off one of them.
  for (std::size_t pick = 0; pick < ys.size(); ++pick) {
    UpSet rest = UpSet::zero();
    for (std::size_t i = 0; i < ys.size(); ++i)
      if (i != pick) rest = join(rest, UpSet::principal(ys[i]));
    UpSet r = join(flip_last(ys[pick]), rest);
    if (witnesses(v, r)) return r;
  }
  throw InternalError("no accessibility witness found for " + v.to_string());
}

}  // namespace hyperfix
