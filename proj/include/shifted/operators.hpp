#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shifted/tableau.hpp"
#include "shifted/walk.hpp"

namespace shifted {

enum class Family { F, E, Fprime, Eprime };

const char* to_string(Family f);
// Accepts F, E, F', E' (also Fprime, Eprime).
std::optional<Family> parse_family(std::string_view s);
bool lowers(Family f) noexcept;
bool is_primed(Family f) noexcept;

struct OpKind {
  Family family = Family::F;
  int index = 1;
};

std::string to_string(const OpKind& k);

enum class CriticalType { F1, F2, F3, F4, F5, E1, E2, E3, E4, E5 };

// "1F" .. "5E".
const char* to_string(CriticalType t);
inline bool undefined_type(CriticalType t) { return t == CriticalType::F5 || t == CriticalType::E5; }

enum class Side { Lower, Raise };

struct CriticalMatch {
  CriticalType kind = CriticalType::F3;
  RawWord representative;
  std::size_t start_index = 0;        // full-word position of the first letter
  std::size_t length = 0;             // letters of the {i,i+1}-subword covered
  std::vector<std::size_t> positions; // full-word positions of those letters
  Point location;                     // walk point just before the substring
};

// Every critical substring of every representative (only the priming of the
// first i and first i+1 matters, so at most four representatives are used).
std::vector<CriticalMatch> critical_substrings(const Word& w, int i, Side side);

// Highest start, then longest. All tied matches are returned by the second
// form; they differ only by representative.
std::optional<CriticalMatch> final_critical_substring(const Word& w, int i, Side side);
std::vector<CriticalMatch> final_critical_candidates(const Word& w, int i, Side side);

// Replaces the matched substring by its transformation and canonicalizes.
// Throws Error for type 5.
Word transform(const CriticalMatch& m, int i);

// Throws InvalidIndex unless 1 <= index < n.
std::optional<Word> apply(const OpKind& kind, const Word& w);

// The unique word with the same standardization and weight wt(w) -/+ alpha_i,
// found by exhaustive search. Throws NotUnique if two classes qualify.
std::optional<Word> primed_by_standardization(const Word& w, int i, Side side);

// Throws BrokenSemistandard if the result is not a semistandard filling.
std::optional<ShiftedTableau> apply_to_tableau(const OpKind& kind, const ShiftedTableau& t);

// E'_2 through the last 3' (the first 3 counting as a possible 3').
std::optional<Word> alternate_E2prime(const Word& w);

}  // namespace shifted
