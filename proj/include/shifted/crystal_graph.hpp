#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shifted/operators.hpp"
#include "shifted/tableau.hpp"

namespace shifted {

struct Vertex {
  std::optional<Word> word;  // absent for abstract imported graphs
  WeightVector weight;
};

struct Edge {
  int src = 0;
  int dst = 0;
  int index = 1;
  bool primed = false;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string edge_label(int index, bool primed);

class CrystalGraph {
 public:
  explicit CrystalGraph(int n = 1);

  int alphabet() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int add_vertex(Vertex v);
  // Throws MalformedGraph for unknown endpoints or an index outside 1..n-1.
  void add_edge(const Edge& e);
  void remove_edge(std::size_t k);
  void replace_edge(std::size_t k, const Edge& e);

  // All targets of v's out-edges (resp. sources of in-edges) with this label.
  const std::vector<int>& out(int v, int i, bool primed) const { return out_[slot(v, i, primed)]; }
  const std::vector<int>& in(int v, int i, bool primed) const { return in_[slot(v, i, primed)]; }
  // The first such neighbour, if any.
  std::optional<int> f(int v, int i, bool primed = false) const;
  std::optional<int> e(int v, int i, bool primed = false) const;

  std::optional<int> find(const Word& w) const;

  // Vertex k here is vertex origin[k] of the graph this one was cut from.
  std::vector<int> origin;
  // Set for graphs built from tableaux.
  std::optional<SkewShape> shape;

  friend bool operator==(const CrystalGraph& a, const CrystalGraph& b);

 private:
  std::size_t slot(int v, int i, bool primed) const;
  int n_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_, in_;
};

// Vertices are enumerate_tableaux(shape, n) in order; edges come from F_i and
// F'_i. Every edge is re-checked against E_i / E'_i.
CrystalGraph build_graph(const SkewShape& shape, int n, int jobs = 1);

// Tableau of a vertex of a graph built from a shape.
ShiftedTableau tableau_of(const CrystalGraph& g, int v);

// Weakly connected components, each listed in increasing vertex order.
std::vector<std::vector<int>> component_ids(const CrystalGraph& g);
CrystalGraph induced_subgraph(const CrystalGraph& g, const std::vector<int>& ids);
std::vector<CrystalGraph> components(const CrystalGraph& g);
// Disjoint union; ids of b are shifted by a.size().
CrystalGraph disjoint_union(const CrystalGraph& a, const CrystalGraph& b);

struct StringStats {
  int eps = 0, phi = 0;
  int eps_prime = 0, phi_prime = 0;
  int eps_hat = 0, phi_hat = 0;
  friend bool operator==(const StringStats&, const StringStats&) = default;
};

std::string to_string(const StringStats& s);

// Distances to the top and bottom of the {i,i'}-component, measured in steps
// where parallel i and i' edges form a single step. A step counts towards the
// primed (resp. unprimed) totals if it carries a primed (resp. unprimed)
// edge. -1 marks an unreachable end (only in malformed graphs).
StringStats string_stats(const CrystalGraph& g, int v, int i);

enum class StringKind { Separated, Collapsed };

struct StringShape {
  StringKind kind = StringKind::Collapsed;
  std::vector<int> upper;  // collapsed: the whole chain, top first
  std::vector<int> lower;  // separated only
};

// Throws NotAString if the {i,i'}-component of v has neither legal shape.
StringShape classify_string(const CrystalGraph& g, int v, int i);
std::optional<StringShape> try_classify_string(const CrystalGraph& g, int v, int i);

// Per-vertex statistics and string shapes for every index, computed once.
class GraphStats {
 public:
  explicit GraphStats(const CrystalGraph& g);
  const StringStats& at(int v, int i) const { return stats_[idx(v, i)]; }
  // Absent when the component is not a legal string.
  const std::optional<StringShape>& shape(int v, int i) const { return shapes_[comp_[idx(v, i)]]; }
  bool collapsed(int v, int i) const;
  bool separated(int v, int i) const;
  int string_id(int v, int i) const { return comp_[idx(v, i)]; }
  // Smallest vertex id in the {i,i'}-component of v.
  int string_root(int v, int i) const { return roots_[comp_[idx(v, i)]]; }

 private:
  std::size_t idx(int v, int i) const { return static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(i - 1); }
  std::size_t stride_;
  std::vector<StringStats> stats_;
  std::vector<int> comp_;
  std::vector<std::optional<StringShape>> shapes_;
  std::vector<int> roots_;
};

// The unique vertex with no incoming edges. Throws NotUnique if there is not
// exactly one, NotStrictWeight if its weight is not a strict partition.
int highest_weight(const CrystalGraph& c);

// Vertex map c1 -> c2 built by matching labelled edges from the two maxima,
// with weights and all six statistics compared pointwise.
std::optional<std::vector<int>> component_isomorphic(const CrystalGraph& c1, const CrystalGraph& c2);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);
// Throws MalformedGraph (or ParseError for unreadable JSON).
CrystalGraph import_json(const std::string& text);

}  // namespace shifted
