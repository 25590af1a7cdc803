#include <gtest/gtest.h>

#include <set>

#include "gridlink/generators.hpp"

using namespace gridlink;

namespace {

RadicalSum rs(const char* s) { return RadicalSum::parse(s); }

void expect_certified(const PolygonalChain& c, ChainKind k, long h) {
  const Classification cl = classify(c);
  EXPECT_TRUE(cl.satisfies(k)) << describe(c);
  EXPECT_EQ(static_cast<long>(c.edge_count()), h) << describe(c);
  EXPECT_EQ(c.kind, k);
}

std::set<GridNode> covered(const PolygonalChain& c) {
  std::set<GridNode> s;
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    for (const auto& hit : lattice_hits(c.edge(i), c.n)) s.insert(hit.node);
  }
  return s;
}

}  // namespace

TEST(Catalog, EntriesAsPrinted) {
  EXPECT_EQ(describe(explicit_chain("fig3-c4")), "(-1,-1)-(3/2,4)-(4,-1)-(-1,4)-(3/2,-1)-(4,4)-(-1,-1)");
  EXPECT_EQ(describe(explicit_chain("lemma22-f5")), "(4,0)-(-1,0)-(11/3,7/3)-(1/2,11/2)-(4,-5)-(4,5)-(0,1)-(0,4)-(4,0)");
  EXPECT_EQ(describe(explicit_chain("sec3-t5")), "(2,3)-(4,3)-(1,0)-(1,3)-(4,0)-(0,0)-(0,4)-(4,4)-(4,1)");
  EXPECT_EQ(explicit_chain("lemma22-f5").vertices.size(), 9U);
  EXPECT_THROW(explicit_chain("no-such-id"), DomainError);
  for (const auto& e : catalog()) expect_certified(explicit_chain(e.id), e.kind, static_cast<long>(explicit_chain(e.id).edge_count()));
}

TEST(Spirals, FrozenExamples) {
  EXPECT_EQ(describe(triangular_spiral(4, SpiralKind::bottom)), "(0,0)-(2,0)-(0,2)");
  EXPECT_EQ(describe(triangular_spiral(6, SpiralKind::bottom)), "(0,0)-(4,0)-(0,4)-(0,1)-(2,1)");
  EXPECT_EQ(describe(triangular_spiral(5, SpiralKind::top)), "(4,4)-(0,4)-(4,0)-(4,3)-(2,3)");
  EXPECT_THROW(triangular_spiral(3, SpiralKind::bottom), DomainError);
}

TEST(Spirals, EdgeBudgets) {
  for (long n = 4; n <= 30; ++n) {
    EXPECT_EQ(static_cast<long>(triangular_spiral(n, SpiralKind::bottom).edge_count()), n - 2);
    EXPECT_EQ(static_cast<long>(triangular_spiral(n, SpiralKind::top).edge_count()), n - 1);
  }
}

TEST(Spirals, MissedPoints) {
  EXPECT_EQ(missed_points(7), std::make_pair(GridNode{1, 2}, GridNode{4, 4}));
  EXPECT_EQ(missed_points(8), std::make_pair(GridNode{2, 2}, GridNode{5, 4}));
  EXPECT_EQ(missed_points(9), std::make_pair(GridNode{2, 3}, GridNode{6, 5}));
  EXPECT_THROW(missed_points(3), DomainError);
}

// Each spiral covers its triangle except exactly one missed point (n up to
// 200 runs in the acceptance binary).
TEST(Spirals, RegionCoverage) {
  for (long n = 4; n <= 80; ++n) {
    const auto [p1, p2] = missed_points(n);
    std::set<GridNode> low, high;
    for (long x = 0; x < n; ++x) {
      for (long y = 0; y < n; ++y) (x + y <= n - 2 ? low : high).insert({x, y});
    }
    low.erase(p1);
    high.erase(p2);
    ASSERT_EQ(covered(triangular_spiral(n, SpiralKind::bottom)), low) << "n=" << n;
    ASSERT_EQ(covered(triangular_spiral(n, SpiralKind::top)), high) << "n=" << n;
  }
}

TEST(Bridge, SlopeAndIncidences) {
  for (long n = 4; n <= 80; ++n) {
    if (n % 3 == 0) continue;
    std::optional<Assembly> a;
    for (const auto& cfg : bridge_configs()) {
      if ((a = assemble_with(n, cfg))) break;
    }
    ASSERT_TRUE(a) << "n=" << n;
    const BridgeData& b = a->bridge;
    const Point d = b.line_r.direction();
    const Scalar slope = d.y / d.x;
    EXPECT_GT(slope, Scalar(0));
    EXPECT_LT(slope, Scalar(1));
    std::vector<GridNode> hits;
    for (const auto& h : lattice_hits(Segment(b.junction_b, b.junction_u), n)) hits.push_back(h.node);
    std::sort(hits.begin(), hits.end());
    EXPECT_EQ(hits, (std::vector<GridNode>{b.p1, b.p2})) << "n=" << n;
    EXPECT_FALSE(as_grid_node(b.junction_b, n));
    EXPECT_FALSE(as_grid_node(b.junction_u, n));
  }
}

TEST(Paths, AssembleFrozen) {
  EXPECT_EQ(describe(assemble_path(4)), "(0,2)-(2,0)-(-2,0)-(3,5/2)-(3,0)-(0,3)-(3,3)");
  expect_certified(assemble_path(7), ChainKind::path, 12);
  expect_certified(assemble_path(9), ChainKind::path, 16);
  EXPECT_THROW(assemble_path(3), DomainError);
}

TEST(Paths, MixedSpiralExtend) {
  expect_certified(mixed_spiral_extend(covering_path(5)), ChainKind::path, 10);
  const PolygonalChain p9 = mixed_spiral_extend(covering_path(8));
  EXPECT_EQ(p9.n, 9);
  expect_certified(p9, ChainKind::path, 16);
  EXPECT_THROW(mixed_spiral_extend(covering_path(6)), DomainError);
}

TEST(Paths, SmallCatalog) {
  EXPECT_EQ(describe(covering_path(1)), "(0,0)-(1,0)");
  expect_certified(covering_path(2), ChainKind::path, 3);
  expect_certified(covering_path(3), ChainKind::path, 4);
  EXPECT_THROW(covering_path(0), DomainError);
}

TEST(Circuits, Construction) {
  EXPECT_EQ(describe(covering_circuit(2)), "(0,0)-(0,2)-(2,0)-(0,0)");
  EXPECT_EQ(describe(covering_circuit(5)), describe(explicit_chain("lemma22-f5")));
  expect_certified(covering_circuit(4), ChainKind::circuit, 6);
  expect_certified(covering_circuit(10), ChainKind::circuit, 18);
  EXPECT_THROW(covering_circuit(1), ImpossibleRequest);
  EXPECT_THROW(covering_circuit(3), ImpossibleRequest);
}

TEST(Cycles, EvenN) {
  EXPECT_EQ(describe(covering_cycle_even(2)), "(0,0)-(0,2)-(2,0)-(0,0)");
  EXPECT_EQ(describe(covering_cycle_even(4)), "(-1,-1)-(3/2,4)-(4,-1)-(-1,4)-(3/2,-1)-(4,4)-(-1,-1)");
  expect_certified(covering_cycle_even(6), ChainKind::cycle, 10);
  EXPECT_EQ(describe(covering_cycle_even(8)),
            "(-1,1)-(7/2,11/2)-(9,0)-(-4,0)-(3/2,11/2)-(11/2,3/2)-(10,6)-(-1,6)-(7/2,3/2)-(9,7)-(-4,7)-(3/2,3/2)-"
            "(11/2,11/2)-(10,1)-(-1,1)");
  for (long n = 6; n <= 40; n += 2) expect_certified(covering_cycle_even(n), ChainKind::cycle, 2 * (n - 1));
  EXPECT_THROW(covering_cycle_even(5), DomainError);
}

TEST(EpsilonPath, GapAndValidity) {
  const PolygonalChain p = epsilon_path(make_rational(1, 10));
  expect_certified(p, ChainKind::path, 8);
  EXPECT_EQ(endpoint_gap_squared(p), Scalar(make_rational(2, 100), make_rational(-1, 100)));
  EXPECT_EQ(endpoint_gap_squared(p).str(), "1/50-1/100*sqrt(2)");
  const Scalar g2 = endpoint_gap_squared(epsilon_path(make_rational(1, 2)));
  const Scalar g4 = endpoint_gap_squared(epsilon_path(make_rational(1, 4)));
  EXPECT_EQ(g2 / g4, Scalar(4));  // gap ratio 2
  EXPECT_THROW(epsilon_path(Rational(0)), DomainError);
  EXPECT_THROW(epsilon_path(Rational(-1)), DomainError);
  EXPECT_THROW(epsilon_path(Rational(3)), DomainError);
}

TEST(EpsilonPath, ClosesToF5) {
  const auto c = close_by_extension(epsilon_path(make_rational(1, 10)));
  ASSERT_TRUE(c);
  const PolygonalChain f5 = explicit_chain("lemma22-f5");
  EXPECT_EQ(std::set<Point>(c->vertices.begin(), c->vertices.end()),
            std::set<Point>(f5.vertices.begin(), f5.vertices.end()));
}

TEST(DistanceTrails, ExactLengths) {
  EXPECT_EQ(total_length(distance_optimal_trail(2)), RadicalSum(3));
  EXPECT_EQ(total_length(distance_optimal_trail(3)), rs("5+5*sqrt(2)"));
  EXPECT_EQ(total_length(distance_optimal_trail(4)), rs("13+5*sqrt(2)"));
  EXPECT_EQ(total_length(distance_optimal_trail(5)), rs("20+6*sqrt(2)"));
  const PolygonalChain t6 = distance_optimal_trail(6);
  EXPECT_EQ(total_length(t6), rs("33+5*sqrt(2)"));
  expect_certified(t6, ChainKind::trail, 10);
  EXPECT_THROW(distance_optimal_trail(1), DomainError);
}

TEST(Growth, CandidatesAddTwoEdges) {
  const PolygonalChain t = explicit_chain("sec3-t4-c1");
  const auto cands = spiral_growth_candidates(t, true);
  ASSERT_FALSE(cands.empty());
  for (const auto& s : cands) {
    EXPECT_EQ(s.chain.n, 5);
    EXPECT_EQ(s.chain.edge_count(), t.edge_count() + 2);
  }
  const auto g = grow_once(t, ChainKind::trail, false);
  ASSERT_TRUE(g);
  expect_certified(*g, ChainKind::trail, 8);
}
