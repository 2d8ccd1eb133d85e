#include <gtest/gtest.h>

#include "rmf/canonical.hpp"
#include "rmf/decograph.hpp"
#include "rmf/enumerator.hpp"
#include "rmf/graph_io.hpp"

using namespace rmf;

namespace {

// v-2 - v-1 - v1 - v2, colors w b w b, roots at both ends.
DecoratedGraph path_fixture(int middle_weight = 2) {
  DecoratedGraph G;
  G.add_vertex(Color::White, 0, true);
  G.add_vertex(Color::Black);
  G.add_vertex(Color::White);
  G.add_vertex(Color::Black, 0, true);
  G.add_edge(0, 1, 1);
  G.add_edge(1, 2, middle_weight);
  G.add_edge(2, 3, 1);
  const std::vector<int> image{3, 2, 1, 0};
  G.gamma = Gamma{image, induced_edge_action(G, image)};
  return G;
}

DecoratedGraph single_edge(int weight, bool with_gamma) {
  DecoratedGraph G;
  G.add_vertex(Color::White);
  G.add_vertex(Color::Black);
  G.add_edge(0, 1, weight);
  if (with_gamma) G.gamma = Gamma{{1, 0}, {0}};
  return G;
}

// v0 - v1 - v2 with a white center and black roots.
DecoratedGraph sep_path() {
  DecoratedGraph G;
  G.add_vertex(Color::Black, 0, true);
  G.add_vertex(Color::White);
  G.add_vertex(Color::Black, 0, true);
  G.add_edge(0, 1, 1);
  G.add_edge(1, 2, 2);
  return G;
}

std::vector<std::string> clauses(const ViolationList& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.clause);
  return out;
}

}  // namespace

TEST(CheckNonSep, PathFixtureIsValid) {
  const auto G = path_fixture();
  EXPECT_EQ(G.gamma->edges, (std::vector<int>{2, 1, 0}));
  EXPECT_TRUE(check_nonsep(G, parse_type("1,3,0|1")).empty());
}

TEST(CheckNonSep, HeavierMiddleEdge) {
  // 3 is odd, so the gamma clause on the swapped edge fails too.
  const auto vs = check_nonsep(path_fixture(3), parse_type("1,3,0|1"));
  EXPECT_TRUE(has_clause(vs, "degree-equation"));
  EXPECT_TRUE(has_clause(vs, "gamma-even-fixed-edge"));
  const auto v4 = check_nonsep(path_fixture(4), parse_type("1,3,0|1"));
  EXPECT_EQ(clauses(v4), std::vector<std::string>{"degree-equation"});
}

TEST(CheckNonSep, SingleEvenEdge) {
  EXPECT_TRUE(check_nonsep(single_edge(2, true), parse_type("0,2,0|")).empty());
}

TEST(CheckNonSep, MissingOrBadGamma) {
  EXPECT_TRUE(has_clause(check_nonsep(single_edge(2, false), parse_type("0,2,0|")), "gamma-present"));
  auto G = path_fixture();
  G.gamma->vertices = {1, 0, 3, 2};  // maps v-2 to v-1: not an automorphism
  G.gamma->edges = {0, 1, 2};
  EXPECT_FALSE(check_nonsep(G, parse_type("1,3,0|1")).empty());
}

TEST(CheckNonSep, Structure) {
  DecoratedGraph G = single_edge(2, true);
  G.vertices[1].color = Color::White;
  EXPECT_TRUE(has_clause(check_nonsep(G, parse_type("0,2,0|")), "bipartite"));
  DecoratedGraph H = path_fixture();
  H.vertices[0].weight = 1;
  EXPECT_TRUE(has_clause(check_nonsep(H, parse_type("1,3,0|1")), "root-weight"));
}

TEST(CheckNonSep, RejectsZeroIndex) {
  EXPECT_THROW(check_nonsep(path_fixture(), parse_type("2,4,0|0,2")), DomainError);
}

TEST(CheckSep, ReferenceExamples) {
  EXPECT_TRUE(check_sep(sep_path(), parse_type("1,3,1|1,2")).empty());
  DecoratedGraph G;
  G.add_vertex(Color::Black, 0, true);
  G.add_vertex(Color::White);
  G.add_edge(0, 1, 2);
  EXPECT_TRUE(check_sep(G, parse_type("0,2,1|2")).empty());
}

TEST(CheckSep, RootColorsFollowSigns) {
  const auto flipped = recolored(sep_path());
  EXPECT_EQ(clauses(check_sep(flipped, parse_type("1,3,1|1,2"))), std::vector<std::string>{"root-colors"});
  // Against -I the recolored graph is valid.
  const std::vector<int> neg{-1, -2};
  EXPECT_TRUE(check_sep_degrees(flipped, 1, 3, neg).empty());
}

TEST(CheckSep, GammaMustBeAbsent) {
  auto G = sep_path();
  G.gamma = Gamma{{0, 1, 2}, {0, 1}};
  EXPECT_TRUE(has_clause(check_sep(G, parse_type("1,3,1|1,2")), "gamma-absent"));
  EXPECT_THROW(check_sep(sep_path(), parse_type("2,2,1|0,0,0")), DomainError);
}

TEST(FindGammas, Examples) {
  const auto even = find_gammas(single_edge(2, false));
  ASSERT_EQ(even.size(), 1u);
  EXPECT_EQ(even[0].vertices, (std::vector<int>{1, 0}));
  EXPECT_TRUE(find_gammas(single_edge(3, false)).empty());
  const auto path = find_gammas(path_fixture().without_gamma());
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(path[0].vertices, (std::vector<int>{3, 2, 1, 0}));
}

TEST(FindGammas, ParallelEdgesCarryEdgeAction) {
  // Two parallel edges of weight 1 between the swapped pair: gamma must
  // exchange them, since neither may be fixed with an odd weight.
  DecoratedGraph G;
  G.add_vertex(Color::White);
  G.add_vertex(Color::Black);
  G.add_edge(0, 1, 1);
  G.add_edge(0, 1, 1);
  const auto gs = find_gammas(G);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].edges, (std::vector<int>{1, 0}));
  G.gamma = gs[0];
  EXPECT_TRUE(check_nonsep(G, parse_type("1,2,0|")).empty());
}

TEST(Invariants, EnumeratedNonSepGraphs) {
  for (const char* s : {"1,3,0|1", "0,4,0|", "2,5,0|1", "1,4,0|", "2,4,0|"}) {
    const auto t = parse_type(s);
    for (const auto& G : enum_nonsep(t)) {
      ASSERT_TRUE(G.gamma);
      EXPECT_EQ(G.count(Color::White), G.count(Color::Black));
      int root_edges_w = 0;
      int root_edges_b = 0;
      for (int v = 0; v < G.vertex_count(); ++v) {
        EXPECT_EQ(G.gamma->vertices[G.gamma->vertices[v]], v);
        EXPECT_NE(G.gamma->vertices[v], v);
        if (G.vertices[v].root) (G.vertices[v].color == Color::White ? root_edges_w : root_edges_b) += G.degree(v);
      }
      EXPECT_EQ(root_edges_w, t.k());
      EXPECT_EQ(root_edges_b, t.k());
    }
  }
}

TEST(Invariants, SepRecolorCovariance) {
  EnumOptions o;
  o.short_circuit = false;
  for (const char* s : {"1,3,1|1,2", "2,5,1|1", "0,5,1|1", "1,6,1|-1,1", "2,5,1|1,1,1"}) {
    const auto t = parse_type(s);
    std::vector<int> neg;
    for (int i : t.indices()) neg.push_back(-i);
    for (const auto& G : enum_sep(t, o)) {
      EXPECT_TRUE(check_sep_degrees(recolored(G), t.g(), t.n(), neg).empty()) << s;
      int root_edges = 0;
      for (int v = 0; v < G.vertex_count(); ++v)
        if (G.vertices[v].root) root_edges += G.degree(v);
      EXPECT_EQ(root_edges, t.k());
    }
  }
}

TEST(GraphJson, RoundTrip) {
  for (const auto& G : {path_fixture(), sep_path(), single_edge(2, true)}) {
    const auto j = graph_to_json(G);
    EXPECT_EQ(graph_from_json(j), G);
    EXPECT_EQ(graph_from_json_text(j.dump()), G);
  }
}

TEST(GraphJson, SchemaFields) {
  const auto j = graph_to_json(path_fixture());
  EXPECT_EQ(j["vertices"][0]["id"], 0);
  EXPECT_EQ(j["vertices"][0]["color"], "w");
  EXPECT_EQ(j["vertices"][0]["root"], true);
  EXPECT_EQ(j["vertices"][1]["weight"], 0);
  EXPECT_EQ(j["edges"][1]["u"], 1);
  EXPECT_EQ(j["edges"][1]["v"], 2);
  EXPECT_EQ(j["edges"][1]["weight"], 2);
  EXPECT_EQ(j["gamma"], (std::vector<int>{3, 2, 1, 0}));
  EXPECT_TRUE(graph_to_json(sep_path())["gamma"].is_null());
}

TEST(GraphJson, GammaEdgesOptional) {
  auto j = graph_to_json(path_fixture());
  j.erase("gamma_edges");
  EXPECT_EQ(graph_from_json(j), path_fixture());
}

TEST(GraphJson, ItemsPlacedById) {
  const auto G = graph_from_json_text(R"({
    "vertices":[{"id":1,"color":"b","weight":0,"root":false},
                {"id":0,"color":"w","weight":0,"root":false}],
    "edges":[{"id":0,"u":0,"v":1,"weight":2}],
    "gamma":[1,0]})");
  EXPECT_EQ(G, single_edge(2, true));
}

TEST(GraphJson, Rejects) {
  EXPECT_THROW(graph_from_json_text("{"), DomainError);
  EXPECT_THROW(graph_from_json_text(R"({"vertices":[],"edges":[]})"), DomainError);
  EXPECT_THROW(graph_from_json_text(
                   R"({"vertices":[{"id":0,"color":"x","weight":0,"root":false}],"edges":[],"gamma":null})"),
               DomainError);
  EXPECT_THROW(graph_from_json_text(
                   R"({"vertices":[{"id":3,"color":"w","weight":0,"root":false}],"edges":[],"gamma":null})"),
               DomainError);
}

TEST(GraphDot, Shapes) {
  const auto dot = graph_to_dot(path_fixture());
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
  EXPECT_NE(dot.find("shape=circle"), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=black"), std::string::npos);
  EXPECT_NE(dot.find("v1 -- v2 [label=\"2\", style=bold]"), std::string::npos);
  EXPECT_NE(dot.find("v0 -- v1 [label=\"1\"]"), std::string::npos);
}
