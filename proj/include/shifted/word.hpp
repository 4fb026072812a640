#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shifted/error.hpp"

namespace shifted {

// A letter of the marked alphabet 1' < 1 < 2' < 2 < ... < n' < n.
struct Letter {
  int value = 1;
  bool primed = false;

  // Position in the total order: v' -> 2v-1, v -> 2v.
  constexpr int code() const noexcept { return 2 * value - (primed ? 1 : 0); }
  constexpr Letter toggled() const noexcept { return {value, !primed}; }

  friend constexpr bool operator==(Letter, Letter) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.code() <=> b.code();
  }
};

std::string to_string(Letter l);

// An arbitrary priming of a word over {1',1,...,n',n}.
class RawWord {
 public:
  RawWord() = default;
  // Throws Error if n < 1 or a letter lies outside 1..n.
  RawWord(std::vector<Letter> letters, int n);

  int alphabet() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  // Replaces the letter at position k; the value must stay within 1..n.
  void set(std::size_t k, Letter l);

  friend bool operator==(const RawWord&, const RawWord&) = default;
  friend std::strong_ordering operator<=>(const RawWord& a, const RawWord& b);

 private:
  std::vector<Letter> letters_;
  int n_ = 1;
};

// A word in canonical form: the leftmost letter of each value is unprimed.
class Word {
 public:
  Word() = default;
  // Throws NotCanonical unless the letters are already canonical.
  Word(std::vector<Letter> letters, int n);
  explicit Word(const RawWord& raw);

  const RawWord& raw() const noexcept { return raw_; }
  operator const RawWord&() const noexcept { return raw_; }

  int alphabet() const noexcept { return raw_.alphabet(); }
  std::size_t size() const noexcept { return raw_.size(); }
  bool empty() const noexcept { return raw_.empty(); }
  Letter operator[](std::size_t k) const { return raw_[k]; }
  std::span<const Letter> letters() const noexcept { return raw_.letters(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.raw_ <=> b.raw_;
  }

 private:
  struct Trusted {};
  Word(RawWord raw, Trusted) : raw_(std::move(raw)) {}
  friend Word canonicalize(const RawWord& w);

  RawWord raw_;
};

// n_i counts i and i' together; entries are indexed 1..n through at().
struct WeightVector {
  std::vector<int> counts;

  WeightVector() = default;
  explicit WeightVector(std::vector<int> c) : counts(std::move(c)) {}
  static WeightVector zero(int n) { return WeightVector(std::vector<int>(n, 0)); }
  // alpha_i: +1 at i, -1 at i+1.
  static WeightVector simple_root(int n, int i);

  int size() const noexcept { return static_cast<int>(counts.size()); }
  int at(int i) const { return counts.at(static_cast<std::size_t>(i - 1)); }
  int total() const noexcept;

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

std::string to_string(const WeightVector& wt);

// ranks[k] is the standardization rank (1-based) of position k.
struct StandardWord {
  std::vector<int> ranks;
  friend bool operator==(const StandardWord&, const StandardWord&) = default;
};

bool is_canonical(const RawWord& w);
Word canonicalize(const RawWord& w);

// All 2^k primings of first occurrences, k = number of distinct values.
// Bit b of the enumeration index toggles the b-th distinct value in order of
// first appearance; index 0 is the canonical word itself.
std::vector<RawWord> representatives(const Word& w);

WeightVector weight(const RawWord& w);

StandardWord standardize(const RawWord& w);
// "(8,3,4,2,7,1,5,6)"
std::string to_string(const StandardWord& s);

// Letterwise v <-> (n+1-v)', then canonicalized. An involution.
Word eta(const Word& w);

// Digits with optional apostrophes ("3111'21'12'"), or whitespace separated
// tokens ("10 3' 2") for alphabets beyond 9.
RawWord parse_raw_word(std::string_view text, int n);
Word parse_word(std::string_view text, int n);

std::string to_string(const RawWord& w);
inline std::string to_string(const Word& w) { return to_string(w.raw()); }

}  // namespace shifted
