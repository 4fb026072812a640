#include "shifted/operators.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace shifted {

const char* to_string(Family f) {
  switch (f) {
    case Family::F: return "F";
    case Family::E: return "E";
    case Family::Fprime: return "F'";
    case Family::Eprime: return "E'";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "F") return Family::F;
  if (s == "E") return Family::E;
  if (s == "F'" || s == "Fprime") return Family::Fprime;
  if (s == "E'" || s == "Eprime") return Family::Eprime;
  return std::nullopt;
}

bool lowers(Family f) noexcept { return f == Family::F || f == Family::Fprime; }
bool is_primed(Family f) noexcept { return f == Family::Fprime || f == Family::Eprime; }

std::string to_string(const OpKind& k) {
  std::string s = to_string(k.family);
  // F'_2 rather than F'2
  return s.back() == '\'' ? s.substr(0, s.size() - 1) + "_" + std::to_string(k.index) + "'"
                          : s + "_" + std::to_string(k.index);
}

const char* to_string(CriticalType t) {
  static const char* names[] = {"1F", "2F", "3F", "4F", "5F", "1E", "2E", "3E", "4E", "5E"};
  return names[static_cast<int>(t)];
}

namespace {

void check_index(int n, int i) {
  if (i < 1 || i >= n)
    throw InvalidIndex("index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
}

// Representatives differing only in the priming of the first i and first i+1.
std::vector<RawWord> local_representatives(const Word& w, int i) {
  std::vector<std::size_t> firsts;
  for (int v : {i, i + 1}) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k].value == v) {
        firsts.push_back(k);
        break;
      }
    }
  }
  std::vector<RawWord> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << firsts.size()); ++mask) {
    RawWord r = w.raw();
    for (std::size_t b = 0; b < firsts.size(); ++b)
      if (mask >> b & 1) r.set(firsts[b], r[firsts[b]].toggled());
    out.push_back(std::move(r));
  }
  return out;
}

// Relabelled letter classes of the subword.
enum Sym { ONE, ONE_P, TWO, TWO_P };

Sym sym_of(Letter l, int i) {
  if (l.value == i) return l.primed ? ONE_P : ONE;
  return l.primed ? TWO_P : TWO;
}

Letter letter_of(Sym s, int i) {
  switch (s) {
    case ONE: return {i, false};
    case ONE_P: return {i, true};
    case TWO: return {i + 1, false};
    case TWO_P: return {i + 1, true};
  }
  return {i, false};
}

// a b^* c starting at k; returns the length or 0.
std::size_t run_pattern(const std::vector<Sym>& s, std::size_t k, Sym a, Sym b, Sym c) {
  if (s[k] != a) return 0;
  std::size_t j = k + 1;
  while (j < s.size() && s[j] == b) ++j;
  if (j < s.size() && s[j] == c) return j - k + 1;
  return 0;
}

void matches_in(const RawWord& rep, int i, Side side, std::vector<CriticalMatch>& out) {
  const Walk walk = lattice_walk(rep, i);
  std::vector<Sym> s;
  s.reserve(walk.steps.size());
  for (const auto& st : walk.steps) s.push_back(sym_of(st.letter, i));

  auto emit = [&](CriticalType t, std::size_t k, std::size_t len) {
    CriticalMatch m;
    m.kind = t;
    m.representative = rep;
    m.start_index = walk.steps[k].position;
    m.length = len;
    for (std::size_t j = k; j < k + len; ++j) m.positions.push_back(walk.steps[j].position);
    m.location = walk.steps[k].from;
    out.push_back(std::move(m));
  };

  for (std::size_t k = 0; k < s.size(); ++k) {
    const Point p = walk.steps[k].from;
    const bool near_x_axis = p.y == 0 || (p.y == 1 && p.x >= 1);
    const bool near_y_axis = p.x == 0 || (p.x == 1 && p.y >= 1);
    if (side == Side::Lower) {
      if (near_x_axis)
        if (auto len = run_pattern(s, k, ONE, ONE_P, TWO_P)) emit(CriticalType::F1, k, len);
      if (near_y_axis)
        if (auto len = run_pattern(s, k, ONE, TWO, ONE_P)) emit(CriticalType::F2, k, len);
      if (s[k] == ONE && p.y == 0) emit(CriticalType::F3, k, 1);
      if (s[k] == ONE_P && p.x == 0) emit(CriticalType::F4, k, 1);
      if ((s[k] == ONE || s[k] == TWO_P) && p.x == 1 && p.y >= 1) emit(CriticalType::F5, k, 1);
    } else {
      if (near_y_axis)
        if (auto len = run_pattern(s, k, TWO_P, TWO, ONE)) emit(CriticalType::E1, k, len);
      if (near_x_axis)
        if (auto len = run_pattern(s, k, TWO_P, ONE_P, TWO)) emit(CriticalType::E2, k, len);
      if (s[k] == TWO_P && p.x == 0) emit(CriticalType::E3, k, 1);
      if (s[k] == TWO && p.y == 0) emit(CriticalType::E4, k, 1);
      if ((s[k] == ONE || s[k] == TWO_P) && p.y == 1 && p.x >= 1) emit(CriticalType::E5, k, 1);
    }
  }
}

}  // namespace

std::vector<CriticalMatch> critical_substrings(const Word& w, int i, Side side) {
  check_index(w.alphabet(), i);
  std::vector<CriticalMatch> out;
  for (const auto& rep : local_representatives(w, i)) matches_in(rep, i, side, out);
  return out;
}

std::vector<CriticalMatch> final_critical_candidates(const Word& w, int i, Side side) {
  auto all = critical_substrings(w, i, side);
  if (all.empty()) return all;
  auto key = [](const CriticalMatch& m) { return std::pair(m.start_index, m.length); };
  auto best = key(*std::max_element(all.begin(), all.end(),
                                    [&](const auto& a, const auto& b) { return key(a) < key(b); }));
  std::vector<CriticalMatch> out;
  for (auto& m : all)
    if (key(m) == best) out.push_back(std::move(m));
  return out;
}

std::optional<CriticalMatch> final_critical_substring(const Word& w, int i, Side side) {
  auto c = final_critical_candidates(w, i, side);
  if (c.empty()) return std::nullopt;
  return std::move(c.front());
}

Word transform(const CriticalMatch& m, int i) {
  if (undefined_type(m.kind)) throw Error(std::string("type ") + to_string(m.kind) + " has no transformation");
  RawWord r = m.representative;
  const std::size_t last = m.positions.size() - 1;
  auto put = [&](std::size_t j, Sym s) { r.set(m.positions[j], letter_of(s, i)); };
  switch (m.kind) {
    case CriticalType::F1:  // 1(1')^k 2' -> 2'(1')^k 2
      put(0, TWO_P);
      put(last, TWO);
      break;
    case CriticalType::F2:  // 1(2)^k 1' -> 2'(2)^k 1
      put(0, TWO_P);
      put(last, ONE);
      break;
    case CriticalType::F3: put(0, TWO); break;
    case CriticalType::F4: put(0, TWO_P); break;
    case CriticalType::E1:  // 2'(2)^k 1 -> 1(2)^k 1'
      put(0, ONE);
      put(last, ONE_P);
      break;
    case CriticalType::E2:  // 2'(1')^k 2 -> 1(1')^k 2'
      put(0, ONE);
      put(last, TWO_P);
      break;
    case CriticalType::E3: put(0, ONE_P); break;
    case CriticalType::E4: put(0, ONE); break;
    default: break;
  }
  return canonicalize(r);
}

namespace {

std::optional<Word> apply_unprimed(const Word& w, int i, Side side) {
  auto m = final_critical_substring(w, i, side);
  if (!m || undefined_type(m->kind)) return std::nullopt;
  return transform(*m, i);
}

std::optional<Word> apply_primed(const Word& w, int i, Side side) {
  const Letter one{i, false}, two_p{i + 1, true};
  const Letter from = side == Side::Lower ? one : two_p;
  const Letter other = side == Side::Lower ? two_p : one;
  const Letter to = side == Side::Lower ? two_p : one;
  for (const auto& rep : local_representatives(w, i)) {
    std::optional<std::size_t> last_from, last_other;
    for (std::size_t k = 0; k < rep.size(); ++k) {
      if (rep[k] == from) last_from = k;
      if (rep[k] == other) last_other = k;
    }
    if (last_from && (!last_other || *last_from > *last_other)) {
      RawWord r = rep;
      r.set(*last_from, to);
      return canonicalize(r);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> apply(const OpKind& kind, const Word& w) {
  check_index(w.alphabet(), kind.index);
  const Side side = lowers(kind.family) ? Side::Lower : Side::Raise;
  return is_primed(kind.family) ? apply_primed(w, kind.index, side) : apply_unprimed(w, kind.index, side);
}

namespace {

// Fills letters along the rank order: each value v occupies a consecutive run
// of ranks, with some number of primed copies first.
void fill_runs(const std::vector<std::size_t>& by_rank, const WeightVector& target, int v, std::size_t rank,
               std::vector<Letter>& cur, const std::function<void()>& done) {
  if (v > target.size()) {
    done();
    return;
  }
  const int c = target.at(v);
  for (int primes = 0; primes <= c; ++primes) {
    for (int j = 0; j < c; ++j) cur[by_rank[rank + j]] = {v, j < primes};
    fill_runs(by_rank, target, v + 1, rank + c, cur, done);
  }
}

}  // namespace

std::optional<Word> primed_by_standardization(const Word& w, int i, Side side) {
  const int n = w.alphabet();
  check_index(n, i);
  const WeightVector alpha = WeightVector::simple_root(n, i);
  const WeightVector target = side == Side::Lower ? weight(w) - alpha : weight(w) + alpha;
  for (int c : target.counts)
    if (c < 0) return std::nullopt;
  const StandardWord s = standardize(w);
  // Any word with this standardization is weakly increasing along the rank order.
  std::vector<std::size_t> by_rank(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) by_rank[s.ranks[k] - 1] = k;
  std::set<Word> hits;
  std::vector<Letter> cur(w.size());
  fill_runs(by_rank, target, 1, 0, cur, [&] {
    RawWord r(cur, n);
    if (standardize(r) == s) hits.insert(canonicalize(r));
  });
  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1) throw NotUnique("several words share the standardization of " + to_string(w));
  return *hits.begin();
}

std::optional<ShiftedTableau> apply_to_tableau(const OpKind& kind, const ShiftedTableau& t) {
  auto res = apply(kind, reading_word(t));
  if (!res) return std::nullopt;
  std::vector<Letter> entries(res->letters().begin(), res->letters().end());
  if (!is_semistandard(t.shape(), entries))
    throw BrokenSemistandard(to_string(kind) + " of " + format_tableau_inline(t) + " gives " + to_string(*res));
  return ShiftedTableau(t.shape(), std::move(entries), t.alphabet());
}

std::optional<Word> alternate_E2prime(const Word& w) {
  check_index(w.alphabet(), 2);
  std::optional<std::size_t> x, y;
  int twos = 0;
  bool first_three = true;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter l = w[k];
    if (l.value == 3) {
      if (l.primed || first_three) x = k;
      first_three = false;
    }
    if (l == Letter{2, false}) {
      ++twos;
      y = k;
    }
  }
  if (!x) return std::nullopt;
  if (twos == 1 && *x < *y) {
    RawWord r = w.raw();
    r.set(*x, {2, false});
    r.set(*y, {2, true});
    return canonicalize(r);
  }
  RawWord r = w.raw();
  r.set(*x, {2, false});
  if (standardize(r) != standardize(w)) return std::nullopt;
  return canonicalize(r);
}

}  // namespace shifted
