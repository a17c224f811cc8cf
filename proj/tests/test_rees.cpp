#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"

namespace {

using namespace linres;
using linres::testing::ideal;

/// Exponent vector in the Rees presentation ring from a '*'-separated word over
/// the names produced by io::rees_variable_names.
Exponents rees(const ReesRing& ring, const std::string& word) {
  const auto names = io::rees_variable_names(ring, io::default_variables(ring.n()));
  Exponents e(ring.num_vars(), 0);
  std::size_t pos = 0;
  while (pos < word.size()) {
    auto end = word.find('*', pos);
    if (end == std::string::npos) end = word.size();
    const std::string tok = word.substr(pos, end - pos);
    const auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw std::invalid_argument("unknown variable " + tok);
    ++e[static_cast<std::size_t>(it - names.begin())];
    pos = end + 1;
  }
  return e;
}

std::set<std::pair<Exponents, Exponents>> unsigned_set(const std::vector<Binomial>& fs) {
  std::set<std::pair<Exponents, Exponents>> out;
  for (const auto& f : fs) out.insert(detail::unsigned_key(f));
  return out;
}

const MonomialIdeal kMaximalSquared = ideal(2, {"x1^2", "x1x2", "x2^2"});

TEST(ReesRingOmega, SingleEdge) {
  const ReesRing r(ideal(2, {"x1x2"}));
  EXPECT_EQ(r.omega().edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(r.num_vars(), 3u);
}

TEST(ReesRingOmega, SingleSquare) {
  const ReesRing r(ideal(1, {"x1^2"}));
  EXPECT_EQ(r.omega().edges(), (std::vector<Edge>{{0, 0}, {0, 1}}));
}

TEST(ReesRingOmega, ZeroIdealIsAStar) {
  const ReesRing r(zero_ideal(2));
  EXPECT_EQ(r.omega().edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(toric_ideal_gens(r).empty());
}

TEST(ReesRingOmega, VariableEdgeCorrespondence) {
  const ReesRing r(kMaximalSquared);
  for (std::size_t v = 0; v < r.num_vars(); ++v) {
    const auto [a, b] = r.edge_of_variable(v);
    EXPECT_EQ(r.variable_of_edge(a, b), v);
    EXPECT_EQ(r.variable_of_edge(b, a), v);
  }
  EXPECT_FALSE(r.variable_of_edge(2, 2));
}

TEST(LexOrder, RanksYByMinThenMaxAboveX) {
  const ReesRing r(kMaximalSquared);
  const auto o = r.paper_order();
  const auto y11 = rees(r, "y[x1,x1]"), y12 = rees(r, "y[x1,x2]"), y22 = rees(r, "y[x2,x2]");
  const auto x1 = rees(r, "x1"), x2 = rees(r, "x2");
  EXPECT_TRUE(o.greater(y11, y12));
  EXPECT_TRUE(o.greater(y12, y22));
  EXPECT_TRUE(o.greater(y22, x1));
  EXPECT_TRUE(o.greater(x1, x2));
  EXPECT_TRUE(o.greater(rees(r, "y[x1,x1]*y[x2,x2]"), rees(r, "y[x1,x2]*y[x1,x2]")));
}

TEST(ToricIdeal, MaximalIdealSquaredGenerators) {
  const ReesRing r(kMaximalSquared);
  const auto gens = toric_ideal_gens(r);
  for (const auto& f : gens) EXPECT_TRUE(r.in_toric_ideal(f));
  // the ideal they generate contains the three expected binomials
  const auto gb = reduced_groebner(gens, r.paper_order());
  for (const auto& [p, m] : {std::pair<std::string, std::string>{"y[x1,x1]*y[x2,x2]", "y[x1,x2]*y[x1,x2]"},
                             {"x1*y[x2,x2]", "x2*y[x1,x2]"},
                             {"x1*y[x1,x2]", "x2*y[x1,x1]"}})
    EXPECT_EQ(normal_form(rees(r, p), gb), normal_form(rees(r, m), gb)) << p << " - " << m;
}

TEST(ToricIdeal, SingleEdgeHasZeroToricIdeal) {
  const ReesRing r(ideal(2, {"x1x2"}));
  EXPECT_TRUE(toric_ideal_gens(r).empty());
}

TEST(ToricIdeal, EveryGeneratorLiesInTheKernel) {
  for (const auto& I : linres::testing::quadratic_corpus(4, 3)) {
    const ReesRing r(I);
    for (const auto& f : toric_ideal_gens(r)) ASSERT_TRUE(r.in_toric_ideal(f));
  }
}

TEST(ToricIdeal, LatticeRouteMatchesEliminationOracle) {
  std::vector<MonomialIdeal> cases{kMaximalSquared, ideal(4, {"x1x2", "x2x3", "x3x4", "x1x4"})};
  for (const auto& I : linres::testing::quadratic_corpus(3, 3)) cases.push_back(I);
  for (const auto& I : cases) {
    const ReesRing r(I);
    const auto order = r.paper_order();
    ASSERT_EQ(reduced_groebner(toric_ideal_gens(r), order), reduced_groebner(toric_ideal_by_elimination(r), order));
  }
}

TEST(ToricIdeal, HilbertFunctionMatchesSemigroup) {
  for (const auto& I : linres::testing::quadratic_corpus(4, 2)) {
    const ReesRing r(I);
    const auto h = hilbert_agreement(r, toric_ideal_gens(r), 3);
    ASSERT_TRUE(h.agrees);
  }
}

TEST(ReducedGroebner, MaximalIdealSquared) {
  const ReesRing r(kMaximalSquared);
  const auto gb = reduced_groebner(toric_ideal_gens(r), r.paper_order());
  const std::vector<Binomial> expected{
      {rees(r, "y[x1,x1]*y[x2,x2]"), rees(r, "y[x1,x2]*y[x1,x2]")},
      {rees(r, "x2*y[x1,x1]"), rees(r, "x1*y[x1,x2]")},
      {rees(r, "x2*y[x1,x2]"), rees(r, "x1*y[x2,x2]")},
  };
  EXPECT_EQ(gb, expected);
  EXPECT_TRUE(is_groebner_basis(gb, r.paper_order()));
  EXPECT_TRUE(is_reduced(gb, r.paper_order()));
}

TEST(ReducedGroebner, SingleBinomialIsNormalized) {
  const auto o = TermOrder::identity_lex(3);
  const Binomial f{{0, 1, 1}, {2, 0, 0}};
  const auto gb = reduced_groebner({f}, o);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0].plus, (Exponents{2, 0, 0}));
  EXPECT_EQ(gb[0].minus, (Exponents{0, 1, 1}));
}

TEST(ReducedGroebner, IndependentOfGeneratorOrder) {
  std::mt19937 rng(11);
  for (const auto& I : linres::testing::quadratic_corpus(4, 3)) {
    const ReesRing r(I);
    auto gens = toric_ideal_gens(r);
    const auto gb = reduced_groebner(gens, r.paper_order());
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      for (auto& f : gens)
        if (rng() % 2) std::swap(f.plus, f.minus);
      ASSERT_EQ(reduced_groebner(gens, r.paper_order()), gb);
    }
    ASSERT_TRUE(is_reduced(gb, r.paper_order()));
  }
}

TEST(ReducedGroebner, GrevlexBasisIsAlsoValid) {
  const ReesRing r(ideal(4, {"x1x2", "x2x3", "x3x4", "x1x4"}));
  std::vector<std::size_t> rank(r.num_vars());
  for (std::size_t v = 0; v < rank.size(); ++v) rank[v] = v;
  const auto o = TermOrder::grevlex(rank);
  const auto gb = reduced_groebner(toric_ideal_gens(r), o);
  EXPECT_TRUE(is_groebner_basis(gb, o));
  EXPECT_TRUE(is_reduced(gb, o));
}

TEST(ReducedGroebner, PairBudgetRaises) {
  const ReesRing r(linres::testing::ideal(4, {"x1x2", "x2x3", "x3x4", "x1x4", "x1^2"}));
  GroebnerOptions opt;
  opt.max_pairs = 1;
  EXPECT_THROW(reduced_groebner(toric_ideal_gens(r), r.paper_order(), opt), ResourceLimitError);
}

TEST(XDegree, MaximalIdealSquared) {
  const ReesRing r(kMaximalSquared);
  const auto c = x_degree_check(r, reduced_groebner(toric_ideal_gens(r), r.paper_order()));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.max_deg_x, 1);
}

TEST(XDegree, PureYBinomial) {
  const ReesRing r(kMaximalSquared);
  const auto c = x_degree_check(r, {{rees(r, "y[x1,x1]*y[x2,x2]"), rees(r, "y[x1,x2]*y[x1,x2]")}});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.max_deg_x, 0);
}

TEST(XDegree, QuadraticInXFails) {
  const ReesRing r(ideal(4, {"x1x2", "x3x4"}));
  const auto c = x_degree_check(r, {{rees(r, "x1*x2*y[x3,x4]"), rees(r, "x3*x4*y[x1,x2]")}});
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.max_deg_x, 2);
  EXPECT_EQ(c.witness, 0u);
}

/// Corpus ideals, Dirac-relabeled, that satisfy (*) and (**).
std::vector<MonomialIdeal> star_corpus(std::size_t max_graph_n, std::size_t max_square_n) {
  std::vector<MonomialIdeal> out;
  for (const auto& I : linres::testing::quadratic_corpus(max_graph_n, max_square_n)) {
    const Graph g = graph_of_ideal(I);
    if (!is_chordal(complement(simple_part(g))).chordal) continue;
    auto J = relabel(I, dirac_labeling(g).labeling.new_index);
    if (check_star(J).holds && check_star_star(J).holds) out.push_back(std::move(J));
  }
  return out;
}

XDegreeCheck x_degree_under(const MonomialIdeal& I, ReesOrder order) {
  const ReesRing r(I);
  return x_degree_check(r, reduced_groebner(toric_ideal_gens(r), term_order(r, order)));
}

TEST(XDegree, DefaultOrderGivesDegreeTwoForASquareAboveItsPartners) {
  const auto I = ideal(3, {"x1x2", "x1x3", "x2^2"});
  ASSERT_TRUE(check_star(I).holds);
  ASSERT_TRUE(check_star_star(I).holds);
  const ReesRing r(I);
  const auto gb = reduced_groebner(toric_ideal_gens(r), r.paper_order());
  EXPECT_EQ(gb, reduced_groebner(toric_ideal_by_elimination(r), r.paper_order()));
  const auto c = x_degree_check(r, gb);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.max_deg_x, 2);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(gb[*c.witness], (Binomial{rees(r, "x2*x2*y[x1,x3]"), rees(r, "x1*x3*y[x2,x2]")}));
  EXPECT_TRUE(x_degree_under(I, ReesOrder::squares_first).holds);
  for (const auto& v : powers_linear_report(I, linres::testing::kQ, 3)) EXPECT_TRUE(v.linear);
}

TEST(XDegree, DefaultOrderHoldsForSquarefreeStarIdeals) {
  std::size_t checked = 0;
  for (const auto& J : star_corpus(5, 0)) {
    ASSERT_TRUE(x_degree_under(J, ReesOrder::paper_lex).holds);
    ++checked;
  }
  EXPECT_GT(checked, 50u);
}

TEST(XDegree, SquaresFirstOrderHoldsForAllStarIdeals) {
  std::size_t checked = 0;
  for (const auto& J : star_corpus(4, 4)) {
    ASSERT_TRUE(x_degree_under(J, ReesOrder::squares_first).holds);
    ++checked;
  }
  EXPECT_GT(checked, 200u);
}

TEST(SquaresFirstOrder, RanksLoopsAboveOtherY) {
  const ReesRing r(kMaximalSquared);
  const auto o = r.squares_first_order();
  EXPECT_TRUE(o.greater(rees(r, "y[x1,x1]"), rees(r, "y[x2,x2]")));
  EXPECT_TRUE(o.greater(rees(r, "y[x2,x2]"), rees(r, "y[x1,x2]")));
  EXPECT_TRUE(o.greater(rees(r, "y[x1,x2]"), rees(r, "x1")));
  EXPECT_TRUE(o.greater(rees(r, "x1"), rees(r, "x2")));
  EXPECT_EQ(parse_rees_order("squares-first"), ReesOrder::squares_first);
  EXPECT_EQ(rees_order_name(parse_rees_order("paper-lex")), "paper-lex");
  EXPECT_THROW(parse_rees_order("grevlex"), InputError);
}

TEST(SquaresFirstOrder, AgreesWithDefaultOrderWithoutSquares) {
  const ReesRing r(ideal(4, {"x1x2", "x2x3", "x3x4", "x1x4"}));
  EXPECT_EQ(r.squares_first_order().ranking(), r.paper_order().ranking());
}

TEST(Walks, SquareWalkBinomial) {
  const ReesRing r(ideal(4, {"x1x2", "x2x3", "x3x4", "x1x4"}));
  const auto f = walk_to_binomial(r, ClosedWalk{{0, 1, 2, 3}});
  EXPECT_EQ(f.plus, rees(r, "y[x1,x2]*y[x3,x4]"));
  EXPECT_EQ(f.minus, rees(r, "y[x2,x3]*y[x1,x4]"));
}

TEST(Walks, ConeVertexOncePerSide) {
  const ReesRing r(ideal(3, {"x1x2", "x1x3"}));
  const auto f = walk_to_binomial(r, ClosedWalk{{1, 0, 2, 3}});
  EXPECT_EQ(f.plus, rees(r, "x3*y[x1,x2]"));
  EXPECT_EQ(f.minus, rees(r, "x2*y[x1,x3]"));
  EXPECT_EQ(r.deg_x(f.plus), 1);
  EXPECT_EQ(r.deg_x(f.minus), 1);
}

TEST(Walks, LoopContributesSquareVariable) {
  const ReesRing r(kMaximalSquared);
  const auto f = walk_to_binomial(r, ClosedWalk{{0, 0, 1, 2}});
  EXPECT_EQ(f.plus, rees(r, "x2*y[x1,x1]"));
  EXPECT_EQ(f.minus, rees(r, "x1*y[x1,x2]"));
}

TEST(Walks, RejectsInvalidWalks) {
  const ReesRing r(kMaximalSquared);
  EXPECT_THROW(walk_to_binomial(r, ClosedWalk{{0, 1, 2}}), InputError);
  EXPECT_THROW(enumerate_primitive_even_walks(r, 3), InputError);
  const ReesRing s(ideal(3, {"x1x2"}));
  EXPECT_THROW(walk_to_binomial(s, ClosedWalk{{0, 2, 1, 3}}), InputError);
}

TEST(Walks, FourCycleGivesOnePureYWalk) {
  const ReesRing r(ideal(4, {"x1x2", "x2x3", "x3x4", "x1x4"}));
  const auto w = enumerate_primitive_even_walks(r, default_walk_bound(r));
  std::size_t pure_y = 0;
  for (std::size_t t = 0; t < w.walks.size(); ++t)
    if (r.deg_x(w.binomials[t].plus) == 0 && r.deg_x(w.binomials[t].minus) == 0) {
      ++pure_y;
      EXPECT_EQ(r.deg_y(w.binomials[t].plus), 2);
      EXPECT_EQ(w.walks[t].vertices, (std::vector<std::size_t>{0, 1, 2, 3}));
    }
  EXPECT_EQ(pure_y, 1u);
}

TEST(Walks, TwoTrianglesThroughTheCone) {
  const ReesRing r(ideal(4, {"x1x2", "x3x4"}));
  const auto w = enumerate_primitive_even_walks(r, 6);
  const Binomial expected{rees(r, "x3*x4*y[x1,x2]"), rees(r, "x1*x2*y[x3,x4]")};
  EXPECT_EQ(unsigned_set(w.binomials).count(detail::unsigned_key(expected)), 1u);
  EXPECT_EQ(w.max_length_found, 6u);
}

TEST(Walks, EdgelessBaseGraphHasNoPrimitiveWalks) {
  const ReesRing r(zero_ideal(3));
  EXPECT_TRUE(enumerate_primitive_even_walks(r, default_walk_bound(r)).walks.empty());
}

TEST(Walks, EveryWalkBinomialIsPrimitiveAndCanonical) {
  const ReesRing r(ideal(3, {"x1x2", "x2x3", "x1^2", "x3^2"}));
  const auto w = enumerate_primitive_even_walks(r, default_walk_bound(r));
  ASSERT_FALSE(w.walks.empty());
  for (std::size_t t = 0; t < w.walks.size(); ++t) {
    EXPECT_TRUE(is_primitive(r, w.binomials[t]));
    EXPECT_EQ(detail::canonical_walk(w.walks[t].vertices), w.walks[t]);
  }
  EXPECT_EQ(unsigned_set(w.binomials).size(), w.binomials.size());
}

TEST(Walks, NonPrimitiveBinomialDetected) {
  const ReesRing r(kMaximalSquared);
  const auto f = walk_to_binomial(r, ClosedWalk{{0, 0, 1, 2}});
  Binomial doubled{f.plus, f.minus};
  for (auto& e : doubled.plus) e *= 2;
  for (auto& e : doubled.minus) e *= 2;
  EXPECT_FALSE(is_primitive(r, doubled));
  EXPECT_TRUE(is_primitive(r, f));
}

TEST(GraverCrosscheck, MaximalIdealSquared) {
  const ReesRing r(kMaximalSquared);
  const auto gb = reduced_groebner(toric_ideal_gens(r), r.paper_order());
  const auto c = graver_vs_groebner_crosscheck(r, gb, default_walk_bound(r));
  EXPECT_TRUE(c.agrees);
  EXPECT_TRUE(c.bound_sufficient);
  EXPECT_EQ(gb.size(), 3u);
}

TEST(GraverCrosscheck, ZeroIdealAgreesTrivially) {
  const ReesRing r(zero_ideal(2));
  const auto c = graver_vs_groebner_crosscheck(r, {}, default_walk_bound(r));
  EXPECT_TRUE(c.agrees);
  EXPECT_EQ(c.num_walks, 0u);
}

TEST(GraverCrosscheck, ShortBoundIsFlagged) {
  const ReesRing r(ideal(4, {"x1x2", "x3x4"}));
  const auto gb = reduced_groebner(toric_ideal_gens(r), r.paper_order());
  const auto c = graver_vs_groebner_crosscheck(r, gb, 4);
  EXPECT_FALSE(c.agrees);
  EXPECT_FALSE(c.bound_sufficient);
  EXPECT_FALSE(c.missing.empty());
}

TEST(GraverCrosscheck, RandomStarInstancesAgree) {
  std::mt19937_64 rng(2024);
  std::size_t tested = 0;
  for (int attempt = 0; attempt < 400 && tested < 12; ++attempt) {
    const std::size_t n = 3 + rng() % 3;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (rng() % 2) gens.push_back(Monomial::variable(n, i) * Monomial::variable(n, j));
    if (gens.empty()) continue;
    const auto I = minimal_generators(gens, n);
    if (!check_star(I).holds || !check_star_star(I).holds) continue;
    const ReesRing r(I);
    const auto gb = reduced_groebner(toric_ideal_gens(r), r.paper_order());
    const auto c = graver_vs_groebner_crosscheck(r, gb, default_walk_bound(r));
    ASSERT_TRUE(c.agrees);
    ++tested;
  }
  EXPECT_GE(tested, 5u);
}

TEST(ReesJson, BinomialOutputFormat) {
  const ReesRing r(kMaximalSquared);
  const auto gb = reduced_groebner(toric_ideal_gens(r), r.paper_order());
  const auto j = io::binomials_to_json(r, gb, io::default_variables(2));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["plus"], "y[x1,x1]*y[x2,x2]");
  EXPECT_EQ(j[0]["minus"], "y[x1,x2]^2");
  EXPECT_EQ(j[0]["deg_x"], 0);
  EXPECT_EQ(j[0]["deg_y"], 2);
  EXPECT_EQ(j[1]["plus"], "x2*y[x1,x1]");
}

}  // namespace
