#pragma once

#include <string>
#include <vector>

#include "shifted/word.hpp"

namespace shifted {

enum class Direction { North, East, South, West };

const char* to_string(Direction d);

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(Point, Point) = default;
};

std::string to_string(Point p);

struct WalkStep {
  std::size_t position = 0;  // index into the full word
  Letter letter;             // as it appears in the word
  Point from;
  Point to;
  Direction dir = Direction::East;
};

// The i-th lattice walk: letters i, i', i+1, (i+1)' are relabelled 1, 1', 2,
// 2' and every other letter is skipped.
struct Walk {
  int index = 1;
  std::vector<WalkStep> steps;
  Point end;
  // points()[k] is the location before step k; the last entry is `end`.
  std::vector<Point> points() const;
};

Walk lattice_walk(const RawWord& w, int i);

// Step direction of the relabelled letter ("1" = i, "2" = i+1) from p.
Direction step_direction(bool second, bool primed, Point p);

// One line per step: `letter (x,y)->(x',y') DIR`, then `end (x,y)`.
std::string format_walk(const Walk& walk);

}  // namespace shifted
