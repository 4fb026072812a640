#include "doctest.h"

#include <set>

#include "shifted/axioms.hpp"

using namespace shifted;

namespace {

CrystalGraph G(std::vector<int> outer, std::vector<int> inner, int n) {
  return build_graph(make_skew_shape(StrictPartition(outer), StrictPartition(inner)), n);
}

std::set<AxiomId> violated(const Report& r) {
  std::set<AxiomId> out;
  for (const auto& v : r.violations) out.insert(v.axiom);
  return out;
}

// x -1'-> w -2'-> y with weights forced by (K): w has the excluded lengths.
CrystalGraph excluded_lengths_fixture() {
  CrystalGraph g(3);
  const int x = g.add_vertex({std::nullopt, WeightVector({2, 1, 1})});
  const int w = g.add_vertex({std::nullopt, WeightVector({1, 2, 1})});
  const int y = g.add_vertex({std::nullopt, WeightVector({1, 1, 2})});
  g.add_edge({x, w, 1, true});
  g.add_edge({w, y, 2, true});
  return g;
}

// The word crystal on eta of every vertex word, built with F_i and F'_i.
CrystalGraph eta_graph(const CrystalGraph& g) {
  CrystalGraph h(g.alphabet());
  std::map<Word, int> ids;
  for (const auto& v : g.vertices()) {
    Word w = eta(*v.word);
    ids.emplace(w, h.add_vertex({w, weight(w)}));
  }
  for (const auto& [w, id] : ids)
    for (int i = 1; i < g.alphabet(); ++i)
      for (bool p : {false, true})
        if (auto u = apply({p ? Family::Fprime : Family::F, i}, w)) h.add_edge({id, ids.at(*u), i, p});
  return h;
}

}  // namespace

TEST_CASE("axiom names") {
  CHECK(kAllAxioms.size() == 25);
  for (AxiomId a : kAllAxioms) CHECK(parse_axiom(to_string(a)) == a);
  CHECK(parse_axiom_list("A1,B2,A1") == std::vector<AxiomId>{AxiomId::A1, AxiomId::B2});
  CHECK(parse_axiom_list("all").size() == 25);
  CHECK_THROWS_AS(parse_axiom_list("A9"), ParseError);
  CHECK_THROWS_AS(parse_axiom_list(""), ParseError);
}

TEST_CASE("single vertices pass everything") {
  for (const auto& g : {G({}, {}, 3), G({1}, {}, 1), G({}, {}, 1)}) {
    auto r = check_all(g);
    CHECK(r.passed());
    CHECK(r.delta_histogram.empty());
  }
}

TEST_CASE("flagship crystal") {
  auto g = G({4, 2, 1}, {}, 3);
  auto r = check_all(g, 2);
  CHECK(r.passed());
  CHECK(r.tallies.size() == 25);
  long with_both = 0;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) with_both += g.f(v, 1) && g.f(v, 2);
  long hist = 0;
  for (const auto& [d, c] : r.delta_histogram) hist += c;
  CHECK(hist == with_both);
  CHECK(r.violation_count(AxiomId::A8) == 0);
  CHECK(format_report(r).find("result: PASS") != std::string::npos);
  CHECK(format_report(r).find("runtime") == std::string::npos);
  CHECK(format_report(r, true).find("runtime") != std::string::npos);
  CHECK(format_report(check_all(g, 1)) == format_report(r));
}

TEST_CASE("delta at the half-solid square") {
  auto T = parse_tableau("1 1 1 1 1 1 3 3\n2 2 2 3\n3 3\n", 3);
  auto g = build_graph(T.shape(), 3);
  const GraphStats st(g);
  const int w = *g.find(reading_word(T));
  CHECK(delta(g, st, w, 1, true, true) == DeltaPair{0, 0});
  CHECK(st.at(w, 2).phi == 1);
  CHECK(st.at(w, 2).phi_hat == 0);
  CHECK_FALSE(g.f(w, 2));
  CHECK_THROWS_AS(delta(g, st, w, 1, false, false), MissingArrow);
  CHECK_THROWS_AS(delta(g, st, w, 2), InvalidIndex);

  // The square closes with unprimed edges and not with primed ones.
  const int x = *g.f(w, 1, true), y = *g.f(w, 2, true);
  CHECK(g.f(y, 1) == g.f(x, 2));
  CHECK(g.f(y, 1, true) != g.f(y, 1));
}

TEST_CASE("delta stays in {0,1}^2 and half-primed squares have delta (1,1)") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& lam : strict_partitions(size)) {
      auto g = build_graph(make_skew_shape(lam), 3);
      const GraphStats st(g);
      for (int w = 0; w < static_cast<int>(g.size()); ++w)
        for (bool dual : {false, true})
          for (bool xp : {false, true})
            for (bool yp : {false, true}) {
              DeltaPair d;
              try {
                d = dual ? delta_dual(g, st, w, 1, xp, yp) : delta(g, st, w, 1, xp, yp);
              } catch (const MissingArrow&) {
                continue;
              }
              CHECK(d.d_eps_i >= 0);
              CHECK(d.d_eps_i <= 1);
              CHECK(d.d_eps_i1 >= 0);
              CHECK(d.d_eps_i1 <= 1);
            }
      for (int w = 0; w < static_cast<int>(g.size()); ++w) {
        auto x = g.f(w, 1), y = g.f(w, 2);
        if (!x || !y || g.f(w, 1, true)) continue;
        const bool square = g.f(*y, 1, true) && g.f(*y, 1, true) == g.f(*x, 2, true);
        CHECK(square == (delta(g, w, 1) == DeltaPair{1, 1}));
      }
    }
}

TEST_CASE("deleting an edge is caught and replays") {
  auto g = G({3, 1}, {}, 3);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    auto m = g;
    const Edge e = m.edges()[k];
    m.remove_edge(k);
    auto r = check_all(m);
    REQUIRE_FALSE(r.passed());
    if (!e.primed) CHECK(r.violation_count(AxiomId::B1) + r.violation_count(AxiomId::K) > 0);
    const GraphStats st(m);
    for (const auto& v : r.violations) {
      auto again = check_at(m, st, v.axiom, v.vertices.front(), v.index);
      bool found = false;
      for (const auto& a : again) found = found || (a.failure == v.failure && a.vertices == v.vertices);
      CHECK_MESSAGE(found, to_string(v.axiom), " ", v.failure);
      CHECK(std::find(v.neighborhood.begin(), v.neighborhood.end(), v.vertices.front()) != v.neighborhood.end());
    }
  }
}

TEST_CASE("violations carry their local picture") {
  auto g = G({2, 1}, {}, 2);
  g.remove_edge(0);
  auto r = check_all(g);
  REQUIRE_FALSE(r.passed());
  CHECK(r.violations.front().picture.find("wt=") != std::string::npos);
  auto sub = neighborhood_graph(g, r.violations.front());
  CHECK(sub.size() == r.violations.front().neighborhood.size());
  CHECK(format_report(r).find("result: FAIL") != std::string::npos);
  CHECK(report_json(r).find("\"passed\": false") != std::string::npos);
}

TEST_CASE("excluded lengths fixture") {
  auto g = excluded_lengths_fixture();
  const GraphStats st(g);
  CHECK(st.at(1, 1) == StringStats{1, 0, 1, 0, 0, 0});
  CHECK(st.at(1, 2) == StringStats{0, 1, 0, 1, 0, 0});
  auto xl = check(g, AxiomId::XL);
  REQUIRE(xl.size() == 2);
  for (const auto& v : xl) CHECK(v.vertices == std::vector<int>{1});
  auto r = check_axioms(g, {AxiomId::XL});
  CHECK(violated(r) == std::set<AxiomId>{AxiomId::XL});
  // The other axioms force more structure around such a vertex.
  CHECK(violated(check_all(g)).count(AxiomId::XL) == 1);
}

TEST_CASE("JSON round trip gives the same report") {
  for (auto g : {G({4, 2, 1}, {}, 3), G({3, 1}, {1}, 3)}) {
    auto back = import_json(export_json(g));
    CHECK(format_report(check_all(back)) == format_report(check_all(g)));
    g.remove_edge(1);
    back = import_json(export_json(g));
    CHECK(report_json(check_all(back)) == report_json(check_all(g)));
  }
}

TEST_CASE("eta carries each axiom to its dual") {
  const std::pair<AxiomId, AxiomId> pairs[] = {
      {AxiomId::A1, AxiomId::A1D}, {AxiomId::A2, AxiomId::A2D}, {AxiomId::A3, AxiomId::A3D},
      {AxiomId::A4, AxiomId::A4D}, {AxiomId::A5, AxiomId::A5D}, {AxiomId::A6, AxiomId::A6D},
      {AxiomId::A7, AxiomId::A7D}, {AxiomId::A8, AxiomId::A8D}};
  for (int n = 3; n <= 4; ++n)
    for (int size = 1; size <= 6; ++size)
      for (const auto& lam : strict_partitions(size)) {
        auto g = build_graph(make_skew_shape(lam), n);
        if (g.size() == 0) continue;
        auto h = eta_graph(g);
        // h is g reversed with index i relabelled n-i
        REQUIRE(h.edges().size() == g.edges().size());
        for (const auto& e : g.edges()) {
          const int a = *h.find(eta(*g.vertex(e.dst).word)), b = *h.find(eta(*g.vertex(e.src).word));
          CHECK(h.f(a, g.alphabet() - e.index, e.primed) == b);
        }
        std::vector<AxiomId> list;
        for (auto [p, d] : pairs) list.insert(list.end(), {p, d});
        auto rg = check_axioms(g, list), rh = check_axioms(h, list);
        for (std::size_t k = 0; k < list.size(); k += 2) {
          CHECK(rg.tallies[k].applied == rh.tallies[k + 1].applied);
          CHECK(rg.tallies[k + 1].applied == rh.tallies[k].applied);
          CHECK(rg.tallies[k].violations == 0);
          CHECK(rh.tallies[k + 1].violations == 0);
        }
      }
}
