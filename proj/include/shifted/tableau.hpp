#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shifted/word.hpp"

namespace shifted {

class StrictPartition {
 public:
  StrictPartition() = default;
  // Throws NotStrict unless parts are positive and strictly decreasing.
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;
  // Zero beyond the last row.
  int part(int row) const noexcept;

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const StrictPartition& p);

// Strict partitions of exactly `size`, in reverse lexicographic order.
std::vector<StrictPartition> strict_partitions(int size);
// Strict partitions mu with mu_r <= lambda_r for every row (including the empty one).
std::vector<StrictPartition> contained_partitions(const StrictPartition& lambda);

// Weights that are strict partitions padded with zeros.
bool is_strict_weight(const WeightVector& wt);
StrictPartition partition_of(const WeightVector& wt);

struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(Cell, Cell) = default;
  friend auto operator<=>(Cell, Cell) = default;
};

class SkewShape {
 public:
  SkewShape() = default;

  const StrictPartition& outer() const noexcept { return outer_; }
  const StrictPartition& inner() const noexcept { return inner_; }
  int rows() const noexcept { return outer_.length(); }
  bool straight() const noexcept { return inner_.empty(); }

  // Cells in reading order: rows bottom to top, left to right.
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  std::optional<std::size_t> index_of(Cell c) const noexcept;
  bool contains(Cell c) const noexcept { return index_of(c).has_value(); }
  // Columns occupied by row r: [first_col(r), last_col(r)]; empty if first > last.
  int first_col(int row) const noexcept;
  int last_col(int row) const noexcept;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  friend SkewShape make_skew_shape(StrictPartition outer, StrictPartition inner);
  StrictPartition outer_;
  StrictPartition inner_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> row_start_;
};

// Throws NotContained if inner has more rows than outer or inner_r > outer_r.
SkewShape make_skew_shape(StrictPartition outer, StrictPartition inner = {});

std::string to_string(const SkewShape& s);

class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  // entries follow shape.cells(); throws InvalidTableau unless semistandard
  // and canonical.
  ShiftedTableau(SkewShape shape, std::vector<Letter> entries, int n);
  ShiftedTableau(SkewShape shape, const Word& reading);

  const SkewShape& shape() const noexcept { return shape_; }
  int alphabet() const noexcept { return n_; }
  const std::vector<Letter>& entries() const noexcept { return entries_; }
  std::optional<Letter> at(Cell c) const;

  friend bool operator==(const ShiftedTableau& a, const ShiftedTableau& b) {
    return a.n_ == b.n_ && a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  SkewShape shape_;
  std::vector<Letter> entries_;
  int n_ = 1;
};

// Row/column conditions only, canonical form not required.
bool is_semistandard(const SkewShape& shape, const std::vector<Letter>& entries);

std::vector<ShiftedTableau> enumerate_tableaux(const SkewShape& shape, int n);

Word reading_word(const ShiftedTableau& t);
WeightVector weight(const ShiftedTableau& t);

// Exactly one 2 or 2', lying in the top row, no 3' in the top row, and a
// nonempty second row.
bool is_special(const ShiftedTableau& t);

// One line per row, top row first; entries separated by spaces, '.' for
// cells of the inner shape.
ShiftedTableau parse_tableau(std::string_view text, int n);
std::string format_tableau(const ShiftedTableau& t);
// Same rows joined by " / ".
std::string format_tableau_inline(const ShiftedTableau& t);

}  // namespace shifted
