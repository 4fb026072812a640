#include "shifted/walk.hpp"

namespace shifted {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::North: return "N";
    case Direction::East: return "E";
    case Direction::South: return "S";
    case Direction::West: return "W";
  }
  return "?";
}

std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::vector<Point> Walk::points() const {
  std::vector<Point> out;
  out.reserve(steps.size() + 1);
  for (const auto& s : steps) out.push_back(s.from);
  out.push_back(end);
  return out;
}

Direction step_direction(bool second, bool primed, Point p) {
  const bool axis = p.x == 0 || p.y == 0;
  if (!second) {
    if (primed) return Direction::East;
    return axis ? Direction::East : Direction::South;
  }
  if (!primed) return Direction::North;
  return axis ? Direction::North : Direction::West;
}

namespace {

Point move(Point p, Direction d) {
  switch (d) {
    case Direction::North: return {p.x, p.y + 1};
    case Direction::East: return {p.x + 1, p.y};
    case Direction::South: return {p.x, p.y - 1};
    case Direction::West: return {p.x - 1, p.y};
  }
  return p;
}

}  // namespace

Walk lattice_walk(const RawWord& w, int i) {
  Walk walk;
  walk.index = i;
  Point p;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter l = w[k];
    if (l.value != i && l.value != i + 1) continue;
    const Direction d = step_direction(l.value == i + 1, l.primed, p);
    const Point q = move(p, d);
    walk.steps.push_back({k, l, p, q, d});
    p = q;
  }
  walk.end = p;
  return walk;
}

std::string format_walk(const Walk& walk) {
  std::string out;
  for (const auto& s : walk.steps)
    out += to_string(s.letter) + " " + to_string(s.from) + "->" + to_string(s.to) + " " + to_string(s.dir) + "\n";
  out += "end " + to_string(walk.end) + "\n";
  return out;
}

}  // namespace shifted
