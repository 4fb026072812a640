#include "shifted/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace shifted {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw NotStrict("partition " + to_string(*this) + " has a non-positive part");
    if (k && parts_[k - 1] <= parts_[k])
      throw NotStrict("partition " + to_string(*this) + " is not strictly decreasing");
  }
}

int StrictPartition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int StrictPartition::part(int row) const noexcept {
  return row >= 1 && row <= length() ? parts_[row - 1] : 0;
}

std::string to_string(const StrictPartition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p.parts()[k]);
  }
  return s + ")";
}

namespace {

void strict_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    strict_rec(remaining - p, p - 1, cur, out);
    cur.pop_back();
  }
}

void contained_rec(const StrictPartition& lambda, int row, int max_part, std::vector<int>& cur,
                   std::vector<StrictPartition>& out) {
  out.emplace_back(cur);
  if (row > lambda.length()) return;
  for (int p = std::min(lambda.part(row), max_part); p >= 1; --p) {
    cur.push_back(p);
    contained_rec(lambda, row + 1, p - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions(int size) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  if (size >= 0) strict_rec(size, size, cur, out);
  return out;
}

std::vector<StrictPartition> contained_partitions(const StrictPartition& lambda) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  contained_rec(lambda, 1, lambda.part(1), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_strict_weight(const WeightVector& wt) {
  for (std::size_t k = 0; k + 1 < wt.counts.size(); ++k) {
    if (wt.counts[k] < 0) return false;
    if (wt.counts[k] > 0 && wt.counts[k] <= wt.counts[k + 1]) return false;
    if (wt.counts[k] == 0 && wt.counts[k + 1] != 0) return false;
  }
  return wt.counts.empty() || wt.counts.back() >= 0;
}

StrictPartition partition_of(const WeightVector& wt) {
  if (!is_strict_weight(wt)) throw NotStrictWeight("weight " + to_string(wt) + " is not a strict partition");
  std::vector<int> parts;
  for (int c : wt.counts)
    if (c > 0) parts.push_back(c);
  return StrictPartition(std::move(parts));
}

SkewShape make_skew_shape(StrictPartition outer, StrictPartition inner) {
  if (inner.length() > outer.length())
    throw NotContained("inner shape " + to_string(inner) + " has more rows than " + to_string(outer));
  for (int r = 1; r <= inner.length(); ++r)
    if (inner.part(r) > outer.part(r))
      throw NotContained(to_string(inner) + " does not fit inside " + to_string(outer));
  SkewShape s;
  s.outer_ = std::move(outer);
  s.inner_ = std::move(inner);
  const int rows = s.outer_.length();
  s.row_start_.assign(static_cast<std::size_t>(rows) + 2, 0);
  for (int r = rows; r >= 1; --r) {
    s.row_start_[r] = s.cells_.size();
    for (int c = s.first_col(r); c <= s.last_col(r); ++c) s.cells_.push_back({r, c});
  }
  return s;
}

int SkewShape::first_col(int row) const noexcept { return row + inner_.part(row); }
int SkewShape::last_col(int row) const noexcept { return row + outer_.part(row) - 1; }

std::optional<std::size_t> SkewShape::index_of(Cell c) const noexcept {
  if (c.row < 1 || c.row > rows()) return std::nullopt;
  if (c.col < first_col(c.row) || c.col > last_col(c.row)) return std::nullopt;
  return row_start_[c.row] + static_cast<std::size_t>(c.col - first_col(c.row));
}

std::string to_string(const SkewShape& s) {
  if (s.straight()) return to_string(s.outer());
  return to_string(s.outer()) + "/" + to_string(s.inner());
}

namespace {

// Whether letter l may sit at cell c given its left and lower neighbours.
bool fits(const SkewShape& shape, const std::vector<Letter>& entries, Cell c, Letter l) {
  if (auto left = shape.index_of({c.row, c.col - 1})) {
    Letter a = entries[*left];
    if (l < a || (a == l && l.primed)) return false;
  }
  if (auto below = shape.index_of({c.row + 1, c.col})) {
    Letter b = entries[*below];
    if (b < l || (b == l && !l.primed)) return false;
  }
  return true;
}

}  // namespace

bool is_semistandard(const SkewShape& shape, const std::vector<Letter>& entries) {
  if (entries.size() != shape.size()) return false;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (!fits(shape, entries, shape.cells()[k], entries[k])) return false;
  return true;
}

ShiftedTableau::ShiftedTableau(SkewShape shape, std::vector<Letter> entries, int n)
    : shape_(std::move(shape)), entries_(std::move(entries)), n_(n) {
  if (entries_.size() != shape_.size())
    throw InvalidTableau("expected " + std::to_string(shape_.size()) + " entries, got " +
                         std::to_string(entries_.size()));
  RawWord w(entries_, n_);
  if (!is_canonical(w)) throw InvalidTableau("tableau is not in canonical form: " + to_string(w));
  if (!is_semistandard(shape_, entries_)) throw InvalidTableau("tableau is not semistandard: " + to_string(w));
}

ShiftedTableau::ShiftedTableau(SkewShape shape, const Word& reading)
    : ShiftedTableau(std::move(shape), std::vector<Letter>(reading.letters().begin(), reading.letters().end()),
                     reading.alphabet()) {}

std::optional<Letter> ShiftedTableau::at(Cell c) const {
  if (auto k = shape_.index_of(c)) return entries_[*k];
  return std::nullopt;
}

namespace {

struct Enumerator {
  const SkewShape& shape;
  int n;
  std::vector<Letter> cur;
  std::vector<int> seen;
  std::vector<ShiftedTableau> out;

  void run(std::size_t k) {
    if (k == shape.size()) {
      out.emplace_back(shape, cur, n);
      return;
    }
    const Cell c = shape.cells()[k];
    for (int v = 1; v <= n; ++v) {
      for (bool primed : {true, false}) {
        const Letter l{v, primed};
        if (primed && seen[v] == 0) continue;
        if (!fits(shape, cur, c, l)) continue;
        cur[k] = l;
        ++seen[v];
        run(k + 1);
        --seen[v];
      }
    }
  }
};

}  // namespace

std::vector<ShiftedTableau> enumerate_tableaux(const SkewShape& shape, int n) {
  if (n < 1) throw Error("alphabet bound must be at least 1");
  Enumerator e{shape, n, std::vector<Letter>(shape.size()), std::vector<int>(static_cast<std::size_t>(n) + 1, 0), {}};
  e.run(0);
  return std::move(e.out);
}

Word reading_word(const ShiftedTableau& t) { return Word(t.entries(), t.alphabet()); }

WeightVector weight(const ShiftedTableau& t) { return weight(RawWord(t.entries(), t.alphabet())); }

bool is_special(const ShiftedTableau& t) {
  const SkewShape& s = t.shape();
  if (s.rows() < 2 || s.first_col(2) > s.last_col(2)) return false;
  int twos = 0;
  bool two_on_top = false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Letter l = t.entries()[k];
    const bool top = s.cells()[k].row == 1;
    if (l.value == 2) {
      ++twos;
      two_on_top = top;
    }
    if (top && l == Letter{3, true}) return false;
  }
  return twos == 1 && two_on_top;
}

namespace {

Letter parse_letter(std::string_view tok, int n) {
  RawWord w = parse_raw_word(std::string(tok) + " ", n);
  if (w.size() != 1) throw ParseError("bad tableau entry '" + std::string(tok) + "'");
  return w[0];
}

}  // namespace

ShiftedTableau parse_tableau(std::string_view text, int n) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  std::vector<int> outer, inner;
  for (const auto& toks : rows) {
    int dots = 0;
    while (dots < static_cast<int>(toks.size()) && toks[dots] == ".") ++dots;
    for (std::size_t k = dots; k < toks.size(); ++k)
      if (toks[k] == ".") throw ParseError("'.' may only appear at the start of a row");
    outer.push_back(static_cast<int>(toks.size()));
    inner.push_back(dots);
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  SkewShape shape = make_skew_shape(StrictPartition(outer), StrictPartition(inner));
  std::vector<Letter> entries(shape.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    for (std::size_t k = static_cast<std::size_t>(inner.size() > r ? inner[r] : 0); k < rows[r].size(); ++k) {
      const Cell c{row, row + static_cast<int>(k)};
      entries[*shape.index_of(c)] = parse_letter(rows[r][k], n);
    }
  }
  // Any representative is accepted; the stored filling is canonical.
  Word w = canonicalize(RawWord(std::move(entries), n));
  return ShiftedTableau(std::move(shape), w);
}

namespace {

std::vector<std::string> row_strings(const ShiftedTableau& t) {
  const SkewShape& s = t.shape();
  std::vector<std::string> rows;
  for (int r = 1; r <= s.rows(); ++r) {
    std::string line;
    for (int c = r; c <= s.last_col(r); ++c) {
      if (!line.empty()) line += ' ';
      auto l = t.at({r, c});
      line += l ? to_string(*l) : ".";
    }
    rows.push_back(std::move(line));
  }
  return rows;
}

}  // namespace

std::string format_tableau(const ShiftedTableau& t) {
  std::string out;
  for (const auto& r : row_strings(t)) out += r + "\n";
  return out;
}

std::string format_tableau_inline(const ShiftedTableau& t) {
  std::string out;
  for (const auto& r : row_strings(t)) {
    if (!out.empty()) out += " / ";
    out += r;
  }
  return out;
}

}  // namespace shifted
