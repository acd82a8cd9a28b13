#include "hyperfix/word.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperfix/error.hpp"

namespace hyperfix {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_)
    if (c != '+' && c != '-') throw InputError("word contains a letter other than '+' or '-': \"" + letters_ + "\"");
}

Word Word::involute() const {
  std::string out(letters_.rbegin(), letters_.rend());
  for (char& c : out) c = flip(c);
  return Word(std::move(out), Unchecked{});
}

Word Word::substr(std::size_t pos, std::size_t len) const { return Word(letters_.substr(pos, len), Unchecked{}); }

Word Word::operator+(const Word& other) const { return Word(letters_ + other.letters_, Unchecked{}); }

Word Word::operator+(char letter) const {
  if (letter != '+' && letter != '-') throw InputError("bad letter");
  return Word(letters_ + letter, Unchecked{});
}

bool is_subword(const Word& u, const Word& v) { return embedded_prefix_length(u, v) == u.size(); }

std::size_t embedded_prefix_length(const Word& pattern, const Word& text) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size() && k < pattern.size(); ++i)
    if (text[i] == pattern[k]) ++k;
  return k;
}

std::vector<Word> all_words(std::size_t maxlen) {
  std::vector<Word> out{Word()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      out.push_back(out[i] + '+');
      out.push_back(out[i] + '-');
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Word> subwords(const Word& w) {
  std::set<Word> acc{Word()};
  for (std::size_t i = w.size(); i-- > 0;) {
    std::set<Word> next = acc;
    const Word head = w.substr(i, 1);
    for (const Word& s : acc) next.insert(head + s);
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

namespace {

std::vector<Word> minimal_only(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Word> kept;
  for (const Word& w : words)
    if (std::none_of(kept.begin(), kept.end(), [&](const Word& k) { return is_subword(k, w); })) kept.push_back(w);
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

std::vector<Word> minimal_common_superwords(const Word& a, const Word& b) {
  // Every minimal common superword is a merge of a and b where each letter is used by at least one of them.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> memo;
  auto rec = [&](auto& self, std::size_t i, std::size_t j) -> const std::vector<Word>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Word> cand;
    if (i == a.size()) {
      cand.push_back(b.substr(j));
    } else if (j == b.size()) {
      cand.push_back(a.substr(i));
    } else {
      for (const Word& t : self(self, i + 1, j)) cand.push_back(a.substr(i, 1) + t);
      for (const Word& t : self(self, i, j + 1)) cand.push_back(b.substr(j, 1) + t);
      if (a[i] == b[j])
        for (const Word& t : self(self, i + 1, j + 1)) cand.push_back(a.substr(i, 1) + t);
    }
    return memo[key] = minimal_only(std::move(cand));
  };
  return rec(rec, 0, 0);
}

std::string display(const Word& w) { return w.empty() ? std::string("□") : w.str(); }

}  // namespace hyperfix
