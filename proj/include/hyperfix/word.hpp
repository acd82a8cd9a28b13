#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hyperfix {

/// A finite word over the alphabet {+, -}. The empty word is the identity of concatenation.
///
/// Words are ordered as plain strings, so '+' sorts before '-'.
class Word {
public:
  Word() = default;
  /// Throws InputError on any character other than '+' or '-'.
  explicit Word(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const noexcept { return letters_; }

  /// Reverse the word and exchange + and -.
  Word involute() const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word operator+(const Word& other) const;
  Word operator+(char letter) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
  struct Unchecked {};
  Word(std::string letters, Unchecked) : letters_(std::move(letters)) {}

  std::string letters_;
};

constexpr char flip(char letter) noexcept { return letter == '+' ? '-' : '+'; }

/// True iff u embeds into v preserving letter order (greedy left-to-right match).
bool is_subword(const Word& u, const Word& v);

/// Length of the longest prefix of `pattern` that embeds into `text`.
std::size_t embedded_prefix_length(const Word& pattern, const Word& text);

/// All words of length <= maxlen in shortlex order.
std::vector<Word> all_words(std::size_t maxlen);

/// All distinct subwords of w, sorted.
std::vector<Word> subwords(const Word& w);

/// Minimal words (under the subword order) having both a and b as subwords.
std::vector<Word> minimal_common_superwords(const Word& a, const Word& b);

/// Rendering for humans: the empty word shows as "□".
std::string display(const Word& w);

}  // namespace hyperfix
