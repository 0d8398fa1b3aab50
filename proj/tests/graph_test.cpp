#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gpcops/graph.hpp"
#include "gpcops/graph_io.hpp"
#include "oracle.hpp"

using namespace gpcops;

namespace {

std::vector<std::pair<int, int>> small_params(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 5; n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  return out;
}

const std::vector<std::pair<int, int>> kFamily = {{28, 8}, {35, 10}, {35, 15}, {42, 6}, {42, 12}, {42, 18}};

}  // namespace

TEST(Graph, SizesAndRegularity) {
  for (auto [n, k] : small_params(24)) {
    GPGraph g(n, k);
    EXPECT_EQ(g.vertex_count(), 2 * n);
    EXPECT_EQ(static_cast<int>(g.edges().size()), 3 * n);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::set<VertexId> nb(g.neighbours(v).begin(), g.neighbours(v).end());
      EXPECT_EQ(nb.size(), 3u);
      EXPECT_FALSE(nb.count(v));
      for (VertexId w : nb) EXPECT_TRUE(g.adjacent(w, v));
    }
  }
  EXPECT_EQ(make_graph(28, 8).edge_count(), 84);
  EXPECT_EQ(make_graph(28, 8).edges().size(), 84u);
}

TEST(Graph, MatchesOracleAdjacency) {
  for (auto [n, k] : small_params(20)) {
    GPGraph g(n, k);
    auto o = oracle::gp(n, k);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::set<int> nb(g.neighbours(v).begin(), g.neighbours(v).end());
      EXPECT_EQ(nb, o.adj[v]);
    }
  }
}

TEST(Graph, RejectsBadParameters) {
  EXPECT_THROW(GPGraph(5, 3), ParamError);
  EXPECT_THROW(GPGraph(4, 1), ParamError);
  EXPECT_THROW(GPGraph(10, 0), ParamError);
  EXPECT_THROW(GPGraph(10, 5), ParamError);
}

TEST(Graph, NeighbourOrder) {
  GPGraph g(28, 8);
  EXPECT_EQ(g.neighbours(g.id(outer(0))), (std::array<VertexId, 3>{1, 27, 28}));
  EXPECT_EQ(g.neighbours(g.id(inner(0))), (std::array<VertexId, 3>{28 + 8, 28 + 20, 0}));
}

TEST(Graph, DistanceExamples) {
  GPGraph g(28, 8);
  EXPECT_EQ(g.distance(g.parse("a0"), g.parse("a0")), 0);
  EXPECT_EQ(g.distance(g.parse("a0"), g.parse("b8")), 2);
  GPGraph p(5, 2);
  EXPECT_EQ(p.distance(p.parse("a0"), p.parse("b1")), 2);
}

TEST(Graph, DistancesMatchOracleBfs) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {14, 4}, {28, 8}, {35, 15}, {17, 5}}) {
    GPGraph g(n, k);
    auto o = oracle::gp(n, k);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      auto expected = oracle::bfs(o, u);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(g.distance(u, v), expected[v]);
        EXPECT_EQ(g.distance(u, v), g.distance(v, u));
      }
    }
  }
}

TEST(Graph, GirthMatchesCycleSearch) {
  for (auto [n, k] : small_params(18)) {
    GPGraph g(n, k);
    EXPECT_EQ(girth(g), oracle::girth_by_cycles(oracle::gp(n, k))) << "GP(" << n << "," << k << ")";
  }
  EXPECT_EQ(girth(GPGraph(5, 2)), 5);
  EXPECT_EQ(girth(GPGraph(7, 1)), 4);
}

TEST(Graph, FamilyGirthIsSeven) {
  for (auto [n, k] : kFamily) {
    GPGraph g(n, k);
    EXPECT_EQ(girth(g), 7);
    EXPECT_EQ(oracle::girth_by_cycles(oracle::gp(n, k), 8), 7);
  }
}

TEST(Graph, Girth7Conditions) {
  using C = Girth7Condition;
  EXPECT_EQ(girth7_conditions(28, 8), std::vector<C>{C::SevenKOverI});
  EXPECT_EQ(girth7_conditions(35, 15), std::vector<C>{C::SevenKOverI});
  EXPECT_EQ(girth7_conditions(11, 4), (std::vector<C>{C::KEqualsFour, C::TwoKPlusThree}));
  EXPECT_EQ(girth7_conditions(14, 4), (std::vector<C>{C::SevenKOverI, C::KEqualsFour, C::ThreeKPlusMinusTwo}));
  EXPECT_EQ(girth7_conditions(7, 1), std::vector<C>{C::SevenKOverI});
  EXPECT_EQ(girth7_conditions(13, 5), (std::vector<C>{C::TwoKPlusThree, C::ThreeKPlusMinusTwo}));
  for (auto [n, k] : small_params(60)) {
    if (!family_membership(n, k)) continue;
    auto tags = girth7_conditions(n, k);
    EXPECT_NE(std::find(tags.begin(), tags.end(), C::SevenKOverI), tags.end());
  }
}

TEST(Graph, FamilyMembership) {
  auto f = family_membership(28, 8);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->divisor, 2);
  EXPECT_TRUE(f->exception);
  f = family_membership(42, 6);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->divisor, 1);
  EXPECT_FALSE(f->exception);
  f = family_membership(35, 15);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->divisor, 3);
  EXPECT_TRUE(f->exception);
  EXPECT_FALSE(family_membership(21, 6));
  EXPECT_FALSE(family_membership(14, 4));
  EXPECT_FALSE(family_membership(11, 4));
  for (auto [n, k] : small_params(70)) {
    auto m = family_membership(n, k);
    if (!m) continue;
    EXPECT_EQ(m->divisor * n, 7 * k);
    if (!m->exception) {
      EXPECT_GE(n, 42);
    }
  }
}

TEST(Graph, RotateReflectExamples) {
  EXPECT_EQ(rotate(outer(3), 5, 28), outer(8));
  EXPECT_EQ(reflect(inner(3), 28), inner(25));
  for (int i = 0; i < 28; ++i) {
    EXPECT_EQ(rotate(outer(i), 28, 28), outer(i));
    EXPECT_EQ(rotate(inner(i), 28, 28), inner(i));
  }
}

TEST(Graph, RotateReflectAreAutomorphisms) {
  for (auto [n, k] : small_params(20)) {
    auto o = oracle::gp(n, k);
    auto map_id = [&](int id, auto f) { return vertex_id(f(vertex_of(id, n)), n); };
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < 2 * n; ++u)
        for (int w : o.adj[u]) {
          auto rot = [&](Vertex v) { return rotate(v, t, n); };
          auto ref = [&](Vertex v) { return reflect(v, n); };
          EXPECT_TRUE(o.adj[map_id(u, rot)].count(map_id(w, rot)));
          EXPECT_TRUE(o.adj[map_id(u, ref)].count(map_id(w, ref)));
        }
  }
}

TEST(Graph, VertexNamesRoundTrip) {
  GPGraph g(28, 8);
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.parse(g.name(v)), v);
  EXPECT_EQ(g.name(g.parse("b27")), "b27");
  EXPECT_THROW(g.parse("a99"), FormatError);
  EXPECT_THROW(g.parse("c1"), FormatError);
  EXPECT_THROW(g.parse("a"), FormatError);
  EXPECT_THROW(g.parse("a-1"), FormatError);
  EXPECT_THROW(g.parse("a1x"), FormatError);
}

TEST(Graph, NeighbourhoodTreeOuterRoot) {
  GPGraph g(28, 8);
  auto tree = neighbourhood_tree(g, g.parse("a0"));
  std::vector<int> sizes;
  for (const auto& layer : tree.layers) sizes.push_back(static_cast<int>(layer.size()));
  EXPECT_EQ(sizes, (std::vector<int>{1, 3, 6, 12, 24}));
  std::set<std::string> doubled;
  for (const auto& c : tree.coincidences) {
    EXPECT_EQ(c.depth, 4);
    EXPECT_EQ(c.slots.size(), 2u);
    doubled.insert(g.name(c.vertex));
  }
  EXPECT_EQ(doubled, (std::set<std::string>{"a19", "a7", "a21", "a9"}));
}

TEST(Graph, NeighbourhoodTreeInnerRoot) {
  GPGraph g(28, 8);
  auto tree = neighbourhood_tree(g, g.parse("b0"));
  EXPECT_TRUE(g.adjacent(g.parse("b24"), g.parse("b4")));
  std::vector<std::pair<VertexId, VertexId>> shallow;
  for (auto e : tree.level_edges)
    if (g.distance(tree.root, e.first) <= 3) shallow.push_back(e);
  EXPECT_EQ(shallow, (std::vector<std::pair<VertexId, VertexId>>{{g.parse("b4"), g.parse("b24")}}));
  EXPECT_EQ(g.distance(g.parse("b0"), g.parse("b4")), 3);
  EXPECT_EQ(g.distance(g.parse("b0"), g.parse("b24")), 3);
  EXPECT_EQ(tree.layers[4].size(), 22u);
  EXPECT_EQ(tree.coincidences.size(), 4u);

  GPGraph h(42, 6);
  std::set<std::string> doubled;
  for (const auto& c : neighbourhood_tree(h, h.parse("b0")).coincidences) doubled.insert(h.name(c.vertex));
  EXPECT_EQ(doubled, (std::set<std::string>{"b35", "b37", "b5", "b7"}));
}

TEST(Graph, CoincidencesMatchWalkMultiplicity) {
  for (auto [n, k] : kFamily) {
    GPGraph g(n, k);
    auto o = oracle::gp(n, k);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      auto tree = neighbourhood_tree(g, root);
      std::set<int> expected;
      for (auto [v, count] : oracle::walk_multiplicity(o, root, 4))
        if (count > 1) expected.insert(v);
      std::set<int> got;
      for (const auto& c : tree.coincidences) {
        EXPECT_EQ(c.depth, 4);
        got.insert(c.vertex);
      }
      EXPECT_EQ(got, expected) << "GP(" << n << "," << k << ") root " << g.name(root);
      EXPECT_EQ(got.size(), 4u);
      const int i = g.vertex(root).index;
      std::set<int> shape;
      for (int a : {k + 1, k - 1, -k + 1, -k - 1}) shape.insert(g.id({g.vertex(root).ring, mod(i + a, n)}));
      EXPECT_EQ(got, shape);
    }
  }
}

TEST(Graph, DottedEdgeHoldsForAllJ) {
  for (auto [n, k] : kFamily) {
    GPGraph g(n, k);
    for (int j = 0; j < n; ++j) EXPECT_TRUE(g.adjacent(g.id(inner(mod(j + 3 * k, n))), g.id(inner(mod(j - 3 * k, n)))));
  }
}

TEST(Graph, NeighbourhoodTreeNeedsFamily) {
  EXPECT_THROW(neighbourhood_tree(GPGraph(14, 4), 0), FamilyError);
  EXPECT_THROW(neighbourhood_tree(GPGraph(21, 6), 0), FamilyError);
}

TEST(GraphIo, AdjList) {
  GPGraph g(5, 2);
  std::string text = export_graph(g, GraphFormat::AdjList);
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "a0: a1 a4 b0");
  EXPECT_EQ(lines[5], "b0: a0 b2 b3");
}

TEST(GraphIo, Json) {
  GPGraph g(5, 2);
  auto j = nlohmann::json::parse(export_graph(g, GraphFormat::Json));
  EXPECT_EQ(j.at("n"), 5);
  EXPECT_EQ(j.at("k"), 2);
  ASSERT_EQ(j.at("edges").size(), 15u);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e[0], e[1]);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  for (auto [u, v] : edges) EXPECT_LT(u, v);
}

TEST(GraphIo, Dot) {
  GPGraph g(5, 2);
  std::string text = export_graph(g, GraphFormat::Dot);
  EXPECT_EQ(text.rfind("graph GP_5_2 {", 0), 0u);
  int edges = 0;
  for (std::size_t pos = 0; (pos = text.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(edges, 15);
  EXPECT_EQ(export_graph(g, GraphFormat::Dot), text);
  EXPECT_THROW(parse_graph_format("png"), FormatError);
}
