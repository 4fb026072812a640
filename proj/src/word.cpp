#include "shifted/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace shifted {

std::string to_string(Letter l) {
  std::string s = std::to_string(l.value);
  if (l.primed) s += '\'';
  return s;
}

RawWord::RawWord(std::vector<Letter> letters, int n) : letters_(std::move(letters)), n_(n) {
  if (n < 1) throw Error("alphabet bound must be at least 1");
  for (const Letter& l : letters_) {
    if (l.value < 1 || l.value > n)
      throw Error("letter " + to_string(l) + " outside 1.." + std::to_string(n));
  }
}

void RawWord::set(std::size_t k, Letter l) {
  if (l.value < 1 || l.value > n_)
    throw Error("letter " + to_string(l) + " outside 1.." + std::to_string(n_));
  letters_.at(k) = l;
}

std::strong_ordering operator<=>(const RawWord& a, const RawWord& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word::Word(std::vector<Letter> letters, int n) : Word(RawWord(std::move(letters), n)) {}

Word::Word(const RawWord& raw) : raw_(raw) {
  if (!is_canonical(raw_)) throw NotCanonical("word " + to_string(raw_) + " is not canonical");
}

WeightVector WeightVector::simple_root(int n, int i) {
  if (i < 1 || i >= n) throw InvalidIndex("index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  WeightVector a = zero(n);
  a.counts[i - 1] = 1;
  a.counts[i] = -1;
  return a;
}

int WeightVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (o.counts.size() != counts.size()) throw Error("weight length mismatch");
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  if (o.counts.size() != counts.size()) throw Error("weight length mismatch");
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] -= o.counts[k];
  return *this;
}

std::string to_string(const WeightVector& wt) {
  std::string s = "(";
  for (std::size_t k = 0; k < wt.counts.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(wt.counts[k]);
  }
  return s + ")";
}

bool is_canonical(const RawWord& w) {
  std::vector<bool> seen(static_cast<std::size_t>(w.alphabet()) + 1, false);
  for (Letter l : w.letters()) {
    if (!seen[l.value]) {
      if (l.primed) return false;
      seen[l.value] = true;
    }
  }
  return true;
}

Word canonicalize(const RawWord& w) {
  RawWord out = w;
  std::vector<bool> seen(static_cast<std::size_t>(w.alphabet()) + 1, false);
  for (std::size_t k = 0; k < out.size(); ++k) {
    Letter l = out[k];
    if (seen[l.value]) continue;
    seen[l.value] = true;
    if (l.primed) out.set(k, {l.value, false});
  }
  return Word(std::move(out), Word::Trusted{});
}

std::vector<RawWord> representatives(const Word& w) {
  std::vector<std::size_t> firsts;
  std::vector<bool> seen(static_cast<std::size_t>(w.alphabet()) + 1, false);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!seen[w[k].value]) {
      seen[w[k].value] = true;
      firsts.push_back(k);
    }
  }
  std::vector<RawWord> out;
  const std::size_t count = std::size_t{1} << firsts.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    RawWord r = w.raw();
    for (std::size_t b = 0; b < firsts.size(); ++b)
      if (mask >> b & 1) r.set(firsts[b], r[firsts[b]].toggled());
    out.push_back(std::move(r));
  }
  return out;
}

WeightVector weight(const RawWord& w) {
  WeightVector wt = WeightVector::zero(w.alphabet());
  for (Letter l : w.letters()) ++wt.counts[l.value - 1];
  return wt;
}

std::string to_string(const StandardWord& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.ranks.size(); ++k) out += (k ? "," : "") + std::to_string(s.ranks[k]);
  return out + ")";
}

StandardWord standardize(const RawWord& w) {
  const std::size_t len = w.size();
  std::vector<std::size_t> order(len);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return w[a] < w[b];
    return w[a].primed ? a > b : a < b;
  });
  StandardWord s;
  s.ranks.resize(len);
  for (std::size_t r = 0; r < len; ++r) s.ranks[order[r]] = static_cast<int>(r) + 1;
  return s;
}

Word eta(const Word& w) {
  const int n = w.alphabet();
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back({n + 1 - l.value, !l.primed});
  return canonicalize(RawWord(std::move(out), n));
}

namespace {

bool is_prime_mark(std::string_view text, std::size_t& k) {
  if (k < text.size() && text[k] == '\'') {
    ++k;
    return true;
  }
  // U+2032 PRIME
  if (text.substr(k, 3) == "\xE2\x80\xB2") {
    k += 3;
    return true;
  }
  return false;
}

}  // namespace

RawWord parse_raw_word(std::string_view text, int n) {
  std::vector<Letter> letters;
  const bool spaced = n > 9 || text.find_first_of(" \t") != std::string_view::npos;
  std::size_t k = 0;
  auto skip_space = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  skip_space();
  while (k < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("unexpected character '" + std::string(1, text[k]) + "' in word");
    int value = 0;
    if (spaced) {
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
        value = value * 10 + (text[k++] - '0');
    } else {
      value = text[k++] - '0';
    }
    const bool primed = is_prime_mark(text, k);
    if (value < 1 || value > n)
      throw ParseError("letter " + std::to_string(value) + " outside 1.." + std::to_string(n));
    letters.push_back({value, primed});
    if (spaced) {
      if (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k])))
        throw ParseError("expected whitespace between letters");
      skip_space();
    }
  }
  return RawWord(std::move(letters), n);
}

Word parse_word(std::string_view text, int n) { return Word(parse_raw_word(text, n)); }

std::string to_string(const RawWord& w) {
  std::string s;
  const bool spaced = w.alphabet() > 9;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (spaced && k) s += ' ';
    s += to_string(w[k]);
  }
  return s;
}

}  // namespace shifted
