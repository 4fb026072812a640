#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shifted/crystal_graph.hpp"

namespace shifted {

enum class AxiomId {
  B1, B2, B3, K,
  A1, A2, A3, A4, A5, A6, A7, A8,
  A1D, A2D, A3D, A4D, A5D, A6D, A7D, A8D,
  XL, SA, L_CAS, L_CF1, L_TD,
};

inline constexpr std::array<AxiomId, 25> kAllAxioms = {
    AxiomId::B1,  AxiomId::B2,  AxiomId::B3,  AxiomId::K,    AxiomId::A1,    AxiomId::A2,   AxiomId::A3,
    AxiomId::A4,  AxiomId::A5,  AxiomId::A6,  AxiomId::A7,   AxiomId::A8,    AxiomId::A1D,  AxiomId::A2D,
    AxiomId::A3D, AxiomId::A4D, AxiomId::A5D, AxiomId::A6D,  AxiomId::A7D,   AxiomId::A8D,  AxiomId::XL,
    AxiomId::SA,  AxiomId::L_CAS, AxiomId::L_CF1, AxiomId::L_TD,
};

const char* to_string(AxiomId a);
std::optional<AxiomId> parse_axiom(std::string_view name);
// Comma-separated names, or "all".
std::vector<AxiomId> parse_axiom_list(std::string_view list);

// Primal: (eps_i(w) - eps_i(y), eps_{i+1}(w) - eps_{i+1}(x)) with x on the i
// side and y on the (i+1) side. Dual: (phi_{i+1}(w) - phi_{i+1}(y),
// phi_i(w) - phi_i(x)) with x = e_{i+1}(w), y = e_i(w).
struct DeltaPair {
  int d_eps_i = 0;
  int d_eps_i1 = 0;
  friend bool operator==(const DeltaPair&, const DeltaPair&) = default;
  friend auto operator<=>(const DeltaPair&, const DeltaPair&) = default;
};

std::string to_string(DeltaPair d);

// Throws MissingArrow unless both arrows exist.
DeltaPair delta(const CrystalGraph& g, const GraphStats& st, int w, int i, bool x_primed = false,
                bool y_primed = false);
DeltaPair delta_dual(const CrystalGraph& g, const GraphStats& st, int w, int i, bool x_primed = false,
                     bool y_primed = false);
// Uses the unprimed arrow on each side when present, the primed one otherwise.
DeltaPair delta(const CrystalGraph& g, int w, int i);
DeltaPair delta_dual(const CrystalGraph& g, int w, int i);

struct Violation {
  AxiomId axiom = AxiomId::K;
  int index = 1;
  std::vector<int> vertices;  // the vertex the check ran at comes first
  std::string failure;        // which direction or clause failed
  std::string picture;        // words, weights, statistics and edges of the vertices
  std::vector<int> neighborhood;  // vertices within distance 3
};

// Runs one axiom at one (vertex, index); check() is this over all pairs, so
// check_at(v.vertices[0], v.index) replays a violation.
std::vector<Violation> check_at(const CrystalGraph& g, const GraphStats& st, AxiomId a, int v, int i);
std::vector<Violation> check(const CrystalGraph& g, const GraphStats& st, AxiomId a);
std::vector<Violation> check(const CrystalGraph& g, AxiomId a);

// Indices at which an axiom is evaluated.
std::vector<int> axiom_indices(const CrystalGraph& g, AxiomId a);

CrystalGraph neighborhood_graph(const CrystalGraph& g, const Violation& v);

struct AxiomTally {
  AxiomId axiom = AxiomId::K;
  long applied = 0;  // (vertex, index) pairs where the hypotheses held
  long violations = 0;
};

struct Report {
  std::vector<AxiomTally> tallies;
  std::vector<Violation> violations;
  std::map<DeltaPair, long> delta_histogram;  // over vertices with f_i and f_{i+1} defined
  double runtime_ms = 0;
  bool passed() const { return violations.empty(); }
  long violation_count(AxiomId a) const;
};

Report check_axioms(const CrystalGraph& g, const std::vector<AxiomId>& axioms, int jobs = 1);
Report check_all(const CrystalGraph& g, int jobs = 1);

std::string format_report(const Report& r, bool timing = false, std::size_t max_violations = 10);
std::string report_json(const Report& r, bool timing = false);

}  // namespace shifted
