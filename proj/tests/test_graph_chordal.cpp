#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>

#include "corpus.hpp"

namespace {

using namespace linres;
using linres::testing::graph_from_mask;
using linres::testing::ideal;
using linres::testing::num_graphs;

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(std::size_t n) { return complement(Graph(n)); }

SimplicialComplex cplx(std::size_t n, std::vector<Facet> facets) { return SimplicialComplex(n, std::move(facets)); }

TEST(GraphOfIdeal, PathFromTwoEdges) {
  const Graph g = graph_of_ideal(ideal(3, {"x1x2", "x2x3"}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_FALSE(g.has_loops());
}

TEST(GraphOfIdeal, SquareIsALoop) {
  const Graph g = graph_of_ideal(ideal(1, {"x1^2"}));
  EXPECT_TRUE(g.has_loop(0));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 0}}));
}

TEST(GraphOfIdeal, ZeroIdealIsEdgeless) {
  const Graph g = graph_of_ideal(zero_ideal(4));
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(GraphOfIdeal, EdgeIdealRoundTrip) {
  for (std::uint64_t mask = 0; mask < num_graphs(5); ++mask) {
    const Graph g = graph_from_mask(5, mask);
    ASSERT_EQ(graph_of_ideal(edge_ideal(g)), g);
  }
}

TEST(GraphOfIdeal, RejectsNonQuadraticIdeal) {
  EXPECT_THROW(graph_of_ideal(linres::testing::sturmfels()), InputError);
}

TEST(Complement, CompleteGraphBecomesEdgeless) {
  EXPECT_EQ(complement(complete(4)).num_edges(), 0u);
}

TEST(Complement, PathOnFourVertices) {
  EXPECT_EQ(complement(path(4)).edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
}

TEST(Complement, IsAnInvolution) {
  for (std::uint64_t mask = 0; mask < num_graphs(5); ++mask) {
    const Graph g = graph_from_mask(5, mask);
    ASSERT_EQ(complement(complement(g)), g);
  }
}

TEST(Complement, RejectsLoops) {
  EXPECT_THROW(complement(graph_of_ideal(ideal(1, {"x1^2"}))), InputError);
}

TEST(Chordality, FourCycleHasWitness) {
  const auto v = is_chordal(cycle(4));
  EXPECT_FALSE(v.chordal);
  EXPECT_EQ(v.chordless_cycle, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Chordality, TreesAreChordal) {
  Graph star(6);
  for (std::size_t v = 1; v < 6; ++v) star.add_edge(0, v);
  EXPECT_TRUE(is_chordal(star).chordal);
  EXPECT_TRUE(is_chordal(path(7)).chordal);
}

TEST(Chordality, ComplementOfQuasiTreeSkeleton) {
  const Graph skeleton = cplx(4, {{0, 1, 2}, {1, 2, 3}}).one_skeleton();
  EXPECT_TRUE(is_chordal(skeleton).chordal);
  EXPECT_TRUE(is_chordal(complement(skeleton)).chordal);
}

TEST(Chordality, FiveCycleWitnessIsCanonical) {
  Graph g(5);
  g.add_edge(0, 3);
  g.add_edge(3, 1);
  g.add_edge(1, 4);
  g.add_edge(4, 2);
  g.add_edge(2, 0);
  const auto v = is_chordal(g);
  EXPECT_FALSE(v.chordal);
  EXPECT_EQ(v.chordless_cycle, (std::vector<std::size_t>{0, 2, 4, 1, 3}));
}

TEST(Chordality, RejectsLoops) {
  EXPECT_THROW(is_chordal(graph_of_ideal(ideal(2, {"x1^2", "x1x2"}))), InputError);
}

void expect_valid_certificate(const Graph& g, const ChordalityVerdict& v) {
  if (v.chordal) {
    ASSERT_TRUE(is_perfect_elimination_ordering(g, v.peo));
    return;
  }
  const auto& c = v.chordless_cycle;
  ASSERT_GE(c.size(), 4u);
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const bool consecutive = b == a + 1 || (a == 0 && b + 1 == c.size());
      ASSERT_EQ(g.adjacent(c[a], c[b]), consecutive);
    }
}

TEST(Chordality, AgreesWithBruteForceUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < num_graphs(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const auto v = is_chordal(g);
      ASSERT_EQ(v.chordal, linres::testing::brute_force_chordal(g)) << "n=" << n << " mask=" << mask;
      expect_valid_certificate(g, v);
    }
}

TEST(CliqueComplex, Triangle) {
  const Graph g = complete(3);
  EXPECT_EQ(clique_complex(g, is_chordal(g).peo).facets(), (std::vector<Facet>{{0, 1, 2}}));
}

TEST(CliqueComplex, Path) {
  const Graph g = path(3);
  EXPECT_EQ(clique_complex(g, is_chordal(g).peo).facets(), (std::vector<Facet>{{0, 1}, {1, 2}}));
}

TEST(CliqueComplex, Edgeless) {
  const Graph g(3);
  EXPECT_EQ(clique_complex(g, is_chordal(g).peo).facets(), (std::vector<Facet>{{0}, {1}, {2}}));
}

TEST(CliqueComplex, RejectsNonPeo) {
  EXPECT_THROW(clique_complex(cycle(4), {0, 1, 2, 3}), InputError);
}

TEST(CliqueComplex, OneSkeletonRecoversGraph) {
  for (std::uint64_t mask = 0; mask < num_graphs(6); ++mask) {
    const Graph g = graph_from_mask(6, mask);
    const auto v = is_chordal(g);
    if (!v.chordal) continue;
    ASSERT_EQ(clique_complex(g, v.peo).one_skeleton(), g);
  }
}

TEST(CliqueComplex, GeneralGraphsUseMaximalCliques) {
  EXPECT_EQ(clique_complex(cycle(4)).facets(), (std::vector<Facet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  for (std::uint64_t mask = 0; mask < num_graphs(6); ++mask) {
    const Graph g = graph_from_mask(6, mask);
    const auto delta = clique_complex(g);
    ASSERT_EQ(delta.one_skeleton(), g);
    const auto v = is_chordal(g);
    if (v.chordal) {
      ASSERT_EQ(delta.facets(), clique_complex(g, v.peo).facets());
    }
  }
}

TEST(SimplicialComplexType, RejectsNonMaximalFacets) {
  EXPECT_THROW(cplx(3, {{0, 1}, {0}}), InputError);
  EXPECT_THROW(cplx(2, {{0, 2}}), InputError);
}

TEST(Leaf, SingleFacetIsALeaf) {
  EXPECT_TRUE(is_leaf(cplx(3, {{0, 1, 2}}), 0));
}

TEST(Leaf, MiddleOfPathIsNotALeaf) {
  const auto d = cplx(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(is_leaf(d, 1));
  EXPECT_TRUE(is_leaf(d, 0));
  EXPECT_TRUE(is_leaf(d, 2));
}

TEST(LeafOrder, SingleFacet) {
  const auto lo = leaf_order(cplx(2, {{0, 1}}));
  ASSERT_TRUE(lo);
  EXPECT_EQ(lo->order, (std::vector<std::size_t>{0}));
}

TEST(LeafOrder, PathOfEdges) {
  const auto d = cplx(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto lo = leaf_order(d);
  ASSERT_TRUE(lo);
  EXPECT_TRUE(is_leaf_order(d, *lo));
}

TEST(LeafOrder, TriangleBoundaryHasNone) {
  const auto d = cplx(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(leaf_order(d));
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    EXPECT_FALSE(is_leaf_order(d, LeafOrder{perm}));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Every antichain of nonempty subsets of {0..n-1}, as facet lists.
void antichains(std::size_t n, std::vector<std::vector<Facet>>& out) {
  const std::uint32_t top = std::uint32_t{1} << n;
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (!chosen.empty()) {
      std::vector<Facet> facets;
      for (auto m : chosen) {
        Facet f;
        for (std::size_t v = 0; v < n; ++v)
          if (m >> v & 1u) f.push_back(v);
        facets.push_back(f);
      }
      out.push_back(facets);
    }
    for (std::uint32_t m = next; m < top; ++m) {
      const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                          [&](std::uint32_t c) { return (c & m) == c || (c & m) == m; });
      if (comparable) continue;
      chosen.push_back(m);
      self(self, m + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
}

/// A complex has a leaf order iff some facet is a leaf and the rest has one.
bool exhaustive_quasi_tree(const SimplicialComplex& d) {
  const std::size_t m = d.size();
  std::map<std::uint32_t, bool> memo;
  auto ok = [&](auto&& self, std::uint32_t active) -> bool {
    if (__builtin_popcount(active) <= 1) return true;
    if (auto it = memo.find(active); it != memo.end()) return it->second;
    std::vector<std::size_t> act;
    for (std::size_t f = 0; f < m; ++f)
      if (active >> f & 1u) act.push_back(f);
    bool res = false;
    for (auto f : act)
      if (is_leaf_of_subcomplex(d, act, f) && self(self, active & ~(std::uint32_t{1} << f))) {
        res = true;
        break;
      }
    return memo[active] = res;
  };
  return ok(ok, (std::uint32_t{1} << m) - 1);
}

TEST(LeafOrder, GreedyMatchesExhaustiveSearch) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<Facet>> all;
    antichains(n, all);
    for (const auto& facets : all) {
      const SimplicialComplex d(n, facets);
      const auto lo = leaf_order(d);
      ASSERT_EQ(lo.has_value(), exhaustive_quasi_tree(d)) << "n=" << n << " facets=" << facets.size();
      if (lo) {
        ASSERT_TRUE(is_leaf_order(d, *lo));
      }
    }
  }
}

TEST(FreeVertices, SingleFacet) {
  EXPECT_EQ(free_vertices(cplx(3, {{0, 1, 2}}), 0), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(FreeVertices, TwoEdges) {
  const auto d = cplx(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(free_vertices(d, 0), (std::vector<std::size_t>{0}));
  EXPECT_EQ(free_vertices(d, 1), (std::vector<std::size_t>{2}));
}

TEST(Dirac, SingleEdgeSatisfiesStar) {
  const auto I = ideal(2, {"x1x2"});
  const auto d = dirac_labeling(graph_of_ideal(I));
  EXPECT_TRUE(check_star(relabel(I, d.labeling.new_index)).holds);
}

TEST(Dirac, ComplementIsAPath) {
  const auto I = ideal(3, {"x1x3"});
  ASSERT_EQ(complement(graph_of_ideal(I)), path(3));
  const auto d = dirac_labeling(graph_of_ideal(I));
  EXPECT_TRUE(is_leaf_order(d.complex, d.leaf_order));
  EXPECT_TRUE(check_star(relabel(I, d.labeling.new_index)).holds);
}

TEST(Dirac, NonChordalComplementRaisesWithCycle) {
  try {
    dirac_labeling(graph_of_ideal(ideal(4, {"x1x2", "x3x4"})));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness()["chordless_cycle"], nlohmann::json({1, 3, 2, 4}));
  }
}

TEST(Dirac, RelabelingSatisfiesStarOnEveryChordalComplement) {
  for (const auto& I : linres::testing::quadratic_corpus(6, 4)) {
    const Graph g = graph_of_ideal(I);
    if (!is_chordal(complement(simple_part(g))).chordal) continue;
    const auto d = dirac_labeling(g);
    ASSERT_TRUE(check_star(relabel(I, d.labeling.new_index)).holds);
  }
}

TEST(ConditionStar, CompleteGraphHolds) {
  EXPECT_TRUE(check_star(ideal(3, {"x1x2", "x1x3", "x2x3"})).holds);
}

TEST(ConditionStar, SingleEdgeFailsWithWitness) {
  const auto c = check_star(ideal(3, {"x1x2"}));
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, (Triple{0, 1, 2}));
}

TEST(ConditionStarStar, SquarefreeIsVacuous) {
  EXPECT_TRUE(check_star_star(ideal(3, {"x1x2", "x2x3"})).holds);
}

TEST(ConditionStarStar, SquareWithUnrelatedEdgeFails) {
  const auto c = check_star_star(ideal(3, {"x1^2", "x2x3"}));
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, (Triple{0, 2, 1}));
}

TEST(ConditionStarStar, SquaredMaximalIdealHolds) {
  EXPECT_TRUE(check_star_star(ideal(2, {"x1^2", "x1x2", "x2^2"})).holds);
}

TEST(FreeVertexSquares, SingleSquare) {
  EXPECT_TRUE(check_free_vertex_squares(ideal(1, {"x1^2"})).holds);
}

TEST(FreeVertexSquares, TwoSquaresInOneFacet) {
  const auto c = check_free_vertex_squares(ideal(2, {"x1^2", "x2^2"}));
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.complex.facets(), (std::vector<Facet>{{0, 1}}));
  EXPECT_EQ(c.witness["same_facet"], nlohmann::json({1, 2}));
}

TEST(FreeVertexSquares, SquareBesideEdge) {
  const auto c = check_free_vertex_squares(ideal(2, {"x1^2", "x1x2"}));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.complex.facets(), (std::vector<Facet>{{0}, {1}}));
}

TEST(FreeVertexSquares, NonChordalComplementRaises) {
  EXPECT_THROW(check_free_vertex_squares(ideal(4, {"x1x2", "x3x4", "x1^2"})), PreconditionError);
}

TEST(GraphJson, RoundTrip) {
  Graph g(3, true);
  g.add_edge(0, 1);
  g.add_edge(2, 2);
  EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g);
  EXPECT_THROW(io::graph_from_json({{"n", 2}, {"edges", {{1, 3}}}}), InputError);
}

}  // namespace
