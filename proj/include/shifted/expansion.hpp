#pragma once

#include <map>
#include <string>
#include <vector>

#include "shifted/crystal_graph.hpp"
#include "shifted/polynomial.hpp"

namespace shifted {

// Multiplicity of each strict partition.
struct Expansion {
  std::map<StrictPartition, int> terms;
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

// "[(3)] x1 + [(2,1)] x2", largest partition first; "0" when empty.
std::string to_string(const Expansion& e);

// One highest-weight vertex per component, weights with trailing zeros dropped.
// Propagates NotUnique / NotStrictWeight.
Expansion expand(const SkewShape& shape, int n, int jobs = 1);

// For a straight shape sigma: which classical polynomial genfun(ShST(sigma, n))
// matches, and whether weighting each tableau by 2^|supp(wt)| gives Q_sigma.
struct Convention {
  StrictPartition sigma;
  bool equals_P = false;
  bool equals_Q = false;
  bool weighted_equals_Q = false;
};

struct ExpansionReport {
  SkewShape shape;
  int n = 0;
  Expansion expansion;
  Polynomial lhs;  // genfun of the skew shape
  Polynomial rhs;  // sum of m_sigma * genfun(ShST(sigma, n))
  bool identity = false;
  std::vector<Convention> conventions;  // one per sigma, largest first
};

ExpansionReport verify_expansion(const SkewShape& shape, int n, int jobs = 1);
Convention convention_of(const StrictPartition& sigma, int n);

std::string format_expansion(const ExpansionReport& r);
std::string expansion_json(const ExpansionReport& r);

}  // namespace shifted
