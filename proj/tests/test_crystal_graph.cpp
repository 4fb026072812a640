#include "doctest.h"

#include "shifted/crystal_graph.hpp"

using namespace shifted;

namespace {

CrystalGraph G(std::vector<int> outer, std::vector<int> inner, int n) {
  return build_graph(make_skew_shape(StrictPartition(outer), StrictPartition(inner)), n);
}

// Hand-built string with the given shape, vertices numbered top first.
CrystalGraph separated_string(int k) {
  CrystalGraph g(2);
  for (int t = 0; t < 2 * k + 2; ++t) g.add_vertex({std::nullopt, WeightVector({2 * k + 2, 0})});
  for (int t = 0; t < k; ++t) {
    g.add_edge({t, t + 1, 1, false});
    g.add_edge({k + 1 + t, k + 2 + t, 1, false});
  }
  for (int t = 0; t <= k; ++t) g.add_edge({t, k + 1 + t, 1, true});
  return g;
}

CrystalGraph collapsed_string(int m) {
  CrystalGraph g(2);
  for (int t = 0; t <= m; ++t) g.add_vertex({std::nullopt, WeightVector({m, 0})});
  for (int t = 0; t < m; ++t) {
    g.add_edge({t, t + 1, 1, false});
    g.add_edge({t, t + 1, 1, true});
  }
  return g;
}

template <class Fn>
void for_each_graph(int max_size, int max_n, bool skew, Fn fn) {
  for (int n = 2; n <= max_n; ++n)
    for (int size = 1; size <= max_size; ++size)
      for (const auto& lam : strict_partitions(size)) {
        std::vector<StrictPartition> inners{StrictPartition{}};
        if (skew) inners = contained_partitions(lam);
        for (const auto& mu : inners) {
          auto g = build_graph(make_skew_shape(lam, mu), n);
          if (g.size() > 0) fn(g);
        }
      }
}

}  // namespace

TEST_CASE("small graphs") {
  auto g = G({2, 1}, {}, 2);
  REQUIRE(g.size() == 2);
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].primed);
  CHECK(g.edges()[0].index == 1);
  CHECK(highest_weight(g) == 0);
  CHECK(classify_string(g, 0, 1).kind == StringKind::Separated);
  CHECK(tableau_of(g, 1) == parse_tableau("1 2'\n2\n", 2));

  auto c = G({3}, {}, 2);
  REQUIRE(c.size() == 4);
  CHECK(c.edges().size() == 6);
  auto s = classify_string(c, 2, 1);
  CHECK(s.kind == StringKind::Collapsed);
  CHECK(s.upper.size() == 4);
  CHECK(string_stats(c, 0, 1) == StringStats{0, 3, 0, 3, 0, 3});
  CHECK(string_stats(c, 1, 1) == StringStats{1, 2, 1, 2, 1, 2});

  CHECK(string_stats(g, 0, 1) == StringStats{0, 1, 0, 1, 0, 0});
  CHECK(string_stats(g, 1, 1) == StringStats{1, 0, 1, 0, 0, 0});

  auto one = G({1}, {}, 2);
  CHECK(classify_string(one, 0, 1).kind == StringKind::Collapsed);
  CHECK(string_stats(one, 0, 1) == StringStats{0, 1, 0, 1, 0, 1});
}

TEST_CASE("string statistics match the closed forms") {
  for (int k = 0; k <= 4; ++k) {
    auto g = separated_string(k);
    auto s = classify_string(g, 0, 1);
    REQUIRE(s.kind == StringKind::Separated);
    for (int j = 0; j <= k; ++j) {
      CHECK(string_stats(g, s.upper[j], 1) == StringStats{j, k - j + 1, 0, 1, j, k - j});
      CHECK(string_stats(g, s.lower[j], 1) == StringStats{j + 1, k - j, 1, 0, j, k - j});
    }
  }
  for (int m = 0; m <= 4; ++m) {
    auto g = collapsed_string(m);
    auto s = classify_string(g, 0, 1);
    REQUIRE(s.kind == StringKind::Collapsed);
    for (int j = 0; j <= m; ++j) CHECK(string_stats(g, j, 1) == StringStats{j, m - j, j, m - j, j, m - j});
  }
}

TEST_CASE("illegal strings are rejected") {
  auto g = separated_string(2);
  g.remove_edge(0);
  CHECK_FALSE(try_classify_string(g, 0, 1));
  CHECK_THROWS_AS(classify_string(g, 0, 1), NotAString);

  auto c = collapsed_string(2);
  c.remove_edge(1);
  CHECK_FALSE(try_classify_string(c, 0, 1));

  CrystalGraph cyc(2);
  cyc.add_vertex({std::nullopt, WeightVector({1, 0})});
  cyc.add_edge({0, 0, 1, false});
  CHECK_FALSE(try_classify_string(cyc, 0, 1));
  CHECK_THROWS_AS(highest_weight(cyc), NotUnique);
  CHECK_THROWS_AS(cyc.add_edge({0, 1, 1, false}), MalformedGraph);
  CHECK_THROWS_AS(cyc.add_edge({0, 0, 2, false}), MalformedGraph);
}

TEST_CASE("tableau crystals: legal strings, weights and the i-th walk") {
  for_each_graph(6, 4, true, [](const CrystalGraph& g) {
    const int n = g.alphabet();
    GraphStats st(g);
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      const auto w = *g.vertex(v).word;
      for (int i = 1; i < n; ++i) {
        REQUIRE_MESSAGE(st.shape(v, i), to_string(w), " i=", i);
        const auto& s = st.at(v, i);
        CHECK(s.phi - s.eps == weight(w).at(i) - weight(w).at(i + 1));
        CHECK(s.phi == lattice_walk(w, i).end.x);
        CHECK(g.out(v, i, false).size() <= 1);
        CHECK(g.out(v, i, true).size() <= 1);
        CHECK(g.in(v, i, false).size() <= 1);
        CHECK(g.in(v, i, true).size() <= 1);
      }
    }
    for (const auto& e : g.edges())
      CHECK(g.vertex(e.dst).weight == g.vertex(e.src).weight - WeightVector::simple_root(n, e.index));
  });
}

TEST_CASE("components have a strict highest weight and straight shapes are connected") {
  for_each_graph(6, 3, false, [](const CrystalGraph& g) {
    CHECK(component_ids(g).size() == 1);
    CHECK(is_strict_weight(g.vertex(highest_weight(g)).weight));
  });
  auto skew = G({3, 1}, {1}, 3);
  for (const auto& c : components(skew)) {
    CHECK(c.origin.size() == c.size());
    CHECK_NOTHROW(highest_weight(c));
  }
}

TEST_CASE("isomorphism of components") {
  auto a = G({2, 1}, {}, 3);
  auto b = G({3, 1}, {1}, 3);
  std::optional<std::vector<int>> found;
  for (const auto& c : components(b))
    if (auto m = component_isomorphic(a, c)) found = m;
  CHECK(found);
  CHECK(component_isomorphic(a, a));
  CHECK_FALSE(component_isomorphic(a, G({3}, {}, 3)));

  auto cut = a;
  cut.remove_edge(0);
  CHECK_FALSE(component_isomorphic(a, cut));
}

TEST_CASE("JSON and DOT export") {
  auto g = G({3, 1}, {}, 3);
  auto back = import_json(export_json(g));
  CHECK(back == g);
  CHECK(export_json(back) == export_json(g));

  auto dot = export_dot(G({2, 1}, {}, 2));
  CHECK(dot.find("v0 -> v1 [label=\"1'\", style=dashed]") != std::string::npos);
  CHECK(dot.rfind("digraph crystal {", 0) == 0);

  CHECK_THROWS_AS(import_json("{"), ParseError);
  CHECK_THROWS_AS(import_json("{\"n\":2,\"vertices\":[{\"id\":0,\"weight\":[1,0]}],\"edges\":[{\"src\":0,\"dst\":3,\"index\":1,\"primed\":false}]}"),
                  MalformedGraph);
  CHECK_THROWS_AS(import_json("{\"n\":2,\"vertices\":[{\"id\":0,\"word\":\"2\",\"weight\":[1,0]}]}"), MalformedGraph);
  auto abstract = import_json("{\"vertices\":[{\"id\":0,\"weight\":[1,0]},{\"id\":1,\"weight\":[0,1]}],\"edges\":[{\"src\":0,\"dst\":1,\"index\":1,\"primed\":true}]}");
  CHECK(abstract.alphabet() == 2);
  CHECK(classify_string(abstract, 1, 1).kind == StringKind::Separated);
}

TEST_CASE("union and mutation bookkeeping") {
  auto a = G({2}, {}, 2);
  auto u = disjoint_union(a, a);
  CHECK(u.size() == 2 * a.size());
  CHECK(component_ids(u).size() == 2);
  auto m = a;
  m.replace_edge(0, {0, 2, 1, false});
  CHECK(m.edges()[0] == Edge{0, 2, 1, false});
  CHECK(m.out(0, 1, false) == std::vector<int>{2});
  CHECK(m.in(1, 1, false).empty());
  CHECK(build_graph(make_skew_shape(StrictPartition({3, 1})), 3, 2) == G({3, 1}, {}, 3));
}
