#include "hamres/hamming.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

using hamres::brute_force_is_resolving;
using hamres::HammingGraph;
using hamres::hamming_distance;
using hamres::one_hot;
using hamres::Vertex;

namespace {

Vertex v(std::initializer_list<int> symbols) { return Vertex{symbols}; }

Vertex random_vertex(const HammingGraph& g, std::mt19937_64& rng) {
  std::vector<int> symbols(g.k());
  for (auto& s : symbols) s = static_cast<int>(rng() % g.a());
  return Vertex{std::move(symbols)};
}

}  // namespace

TEST(HammingGraph, BasicShape) {
  const HammingGraph g(3, 2);
  EXPECT_EQ(g.k(), 3u);
  EXPECT_EQ(g.a(), 2u);
  EXPECT_EQ(g.nvars(), 6u);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_THROW(HammingGraph(0, 2), std::invalid_argument);
  EXPECT_THROW(HammingGraph(3, 1), std::invalid_argument);
}

TEST(HammingGraph, VertexCountOverflowDetected) {
  EXPECT_THROW(HammingGraph(64, 1000).vertex_count(), std::overflow_error);
}

TEST(HammingGraph, ContainsChecksShapeAndRange) {
  const HammingGraph g(2, 3);
  EXPECT_TRUE(g.contains(v({0, 2})));
  EXPECT_FALSE(g.contains(v({0, 3})));
  EXPECT_FALSE(g.contains(v({0, -1})));
  EXPECT_FALSE(g.contains(v({0, 0, 0})));
}

TEST(HammingGraph, VertexIndexRoundTrip) {
  const HammingGraph g(3, 3);
  for (std::uint64_t i = 0; i < g.vertex_count(); ++i)
    EXPECT_EQ(g.index_of(g.vertex_at(i)), i);
  // First symbol is most significant.
  EXPECT_EQ(g.vertex_at(0), v({0, 0, 0}));
  EXPECT_EQ(g.vertex_at(1), v({0, 0, 1}));
  EXPECT_EQ(g.vertex_at(9), v({1, 0, 0}));
}

TEST(HammingGraph, AllVerticesEnumeratesInIndexOrder) {
  const HammingGraph g(2, 2);
  const auto verts = g.all_vertices();
  ASSERT_EQ(verts.size(), 4u);
  EXPECT_EQ(verts[0], v({0, 0}));
  EXPECT_EQ(verts[1], v({0, 1}));
  EXPECT_EQ(verts[2], v({1, 0}));
  EXPECT_EQ(verts[3], v({1, 1}));
}

TEST(HammingDistance, CountsDifferingPositions) {
  EXPECT_EQ(hamming_distance(v({0, 0, 0}), v({0, 0, 0})), 0);
  EXPECT_EQ(hamming_distance(v({0, 1, 2}), v({0, 1, 0})), 1);
  EXPECT_EQ(hamming_distance(v({1, 1, 1}), v({0, 0, 0})), 3);
  EXPECT_THROW(hamming_distance(v({0}), v({0, 0})), std::invalid_argument);
}

TEST(HammingDistance, IsAMetric) {
  const HammingGraph g(4, 3);
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const auto a = random_vertex(g, rng);
    const auto b = random_vertex(g, rng);
    const auto c = random_vertex(g, rng);
    EXPECT_EQ(hamming_distance(a, b), hamming_distance(b, a));
    EXPECT_EQ(hamming_distance(a, b) == 0, a == b);
    EXPECT_LE(hamming_distance(a, c),
              hamming_distance(a, b) + hamming_distance(b, c));
  }
}

TEST(OneHot, IndicatorMatrixLayout) {
  // Word 1213 over alphabet {0..3}: column j carries the indicator of
  // symbol v_j.
  const HammingGraph g(4, 4);
  const auto m = one_hot(g, v({1, 2, 1, 3}));
  const int expected[4][4] = {{0, 0, 0, 0},
                              {1, 0, 1, 0},
                              {0, 1, 0, 0},
                              {0, 0, 0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(m.at(i, j), expected[i][j]);
}

TEST(OneHot, VectorizationIsColumnMajor) {
  const HammingGraph g(3, 2);
  const auto m = one_hot(g, v({1, 0, 0}));
  const auto vec = m.vectorization();
  const int expected[] = {0, 1, 1, 0, 1, 0};
  ASSERT_EQ(vec.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(vec[i], expected[i]);
}

TEST(OneHot, DecodeInvertsEncode) {
  const HammingGraph g(5, 4);
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto x = random_vertex(g, rng);
    EXPECT_EQ(one_hot(g, x).decode(), x);
  }
}

TEST(OneHot, TraceIdentities) {
  // With X = one_hot(x), Y = one_hot(y):
  //   tr(X X^T) = k      (each column contributes one 1)
  //   tr(X Y^T) = k - d(x, y)   (matching positions contribute 1)
  const HammingGraph g(5, 3);
  std::mt19937_64 rng(17);
  const auto trace_product = [](const hamres::OneHot& p,
                                const hamres::OneHot& q) {
    long t = 0;
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        t += static_cast<long>(p.at(i, j)) * q.at(i, j);
    return t;
  };
  for (int round = 0; round < 200; ++round) {
    const auto x = random_vertex(g, rng);
    const auto y = random_vertex(g, rng);
    const auto xm = one_hot(g, x);
    const auto ym = one_hot(g, y);
    EXPECT_EQ(trace_product(xm, xm), 5);
    EXPECT_EQ(trace_product(xm, ym), 5 - hamming_distance(x, y));
  }
}

TEST(BruteForce, SingletonCannotResolveHypercube) {
  const HammingGraph g(2, 2);
  const auto verdict = brute_force_is_resolving(g, {v({0, 0})});
  EXPECT_FALSE(verdict.resolving);
  ASSERT_TRUE(verdict.unresolved_pair.has_value());
  // 01 and 10 are the first unresolved pair in index order.
  EXPECT_EQ(verdict.unresolved_pair->first, v({0, 1}));
  EXPECT_EQ(verdict.unresolved_pair->second, v({1, 0}));
}

TEST(BruteForce, WitnessIsLexicographicallySmallest) {
  // r = {000}: every pair of distinct weight-w vertices collides. The
  // smallest colliding pair overall is (001, 010).
  const HammingGraph g(3, 2);
  const auto verdict = brute_force_is_resolving(g, {v({0, 0, 0})});
  ASSERT_TRUE(verdict.unresolved_pair.has_value());
  EXPECT_EQ(verdict.unresolved_pair->first, v({0, 0, 1}));
  EXPECT_EQ(verdict.unresolved_pair->second, v({0, 1, 0}));
}

TEST(BruteForce, KnownResolvingSets) {
  {
    const HammingGraph g(4, 2);
    EXPECT_TRUE(brute_force_is_resolving(
                    g, {v({0, 0, 0, 0}), v({0, 0, 0, 1}), v({0, 0, 1, 0}),
                        v({0, 1, 0, 0})})
                    .resolving);
  }
  {
    const HammingGraph g(7, 2);
    EXPECT_TRUE(brute_force_is_resolving(g,
                                         {v({0, 0, 0, 0, 0, 0, 0}),
                                          v({0, 0, 0, 0, 0, 0, 1}),
                                          v({0, 0, 0, 0, 0, 1, 0}),
                                          v({0, 0, 0, 1, 1, 0, 0}),
                                          v({0, 0, 1, 0, 1, 0, 0}),
                                          v({0, 1, 0, 0, 1, 0, 0})})
                    .resolving);
  }
}

TEST(BruteForce, MonotoneUnderSupersets) {
  const HammingGraph g(3, 3);
  std::mt19937_64 rng(23);
  const auto verts = g.all_vertices();
  for (int round = 0; round < 30; ++round) {
    std::vector<Vertex> r;
    for (const auto& x : verts)
      if (rng() % 4 == 0) r.push_back(x);
    if (r.empty()) continue;
    if (brute_force_is_resolving(g, r).resolving) {
      r.push_back(verts[rng() % verts.size()]);
      EXPECT_TRUE(brute_force_is_resolving(g, r).resolving);
    }
  }
}

TEST(BruteForce, FullVertexSetResolves) {
  const HammingGraph g(2, 4);
  EXPECT_TRUE(brute_force_is_resolving(g, g.all_vertices()).resolving);
}

TEST(BruteForce, RejectsForeignVertices) {
  const HammingGraph g(2, 2);
  EXPECT_THROW(brute_force_is_resolving(g, {v({0, 2})}),
               std::invalid_argument);
}

TEST(BruteForce, EmptySetResolvesNothing) {
  // With no references every distance vector is the empty tuple.
  const HammingGraph g(2, 2);
  const auto verdict = brute_force_is_resolving(g, {});
  EXPECT_FALSE(verdict.resolving);
  ASSERT_TRUE(verdict.unresolved_pair.has_value());
  EXPECT_EQ(verdict.unresolved_pair->first, v({0, 0}));
  EXPECT_EQ(verdict.unresolved_pair->second, v({0, 1}));
}

TEST(MetricDimension, TinyGraphs) {
  // One coordinate over a binary alphabet: either vertex resolves alone.
  const auto d1 = metric_dimension_exhaustive(HammingGraph(1, 2), 1);
  ASSERT_TRUE(d1.has_value());
  EXPECT_EQ(d1->dimension, 1u);

  // The 3-cube needs 3 vertices.
  const auto d3 = metric_dimension_exhaustive(HammingGraph(3, 2), 3);
  ASSERT_TRUE(d3.has_value());
  EXPECT_EQ(d3->dimension, 3u);
  EXPECT_TRUE(
      brute_force_is_resolving(HammingGraph(3, 2), d3->witness).resolving);

  // Capping the size below the dimension reports failure, not a wrong set.
  EXPECT_FALSE(metric_dimension_exhaustive(HammingGraph(3, 2), 2).has_value());
}

TEST(MetricDimension, BudgetGuardTrips) {
  hamres::MetricDimensionOptions opts;
  opts.subset_budget = 10;
  EXPECT_THROW(metric_dimension_exhaustive(HammingGraph(3, 2), 3, opts),
               hamres::SearchBudgetError);
}

TEST(AdmissibleToPair, InvertsTheEncodingDifference) {
  const HammingGraph g(2, 2);
  const auto [x, y] = admissible_to_pair(g, {1, -1, -1, 1});
  EXPECT_EQ(x, v({0, 1}));
  EXPECT_EQ(y, v({1, 0}));

  // Zero blocks get a shared fill-in symbol.
  const auto [p, q] = admissible_to_pair(g, {1, -1, 0, 0});
  EXPECT_EQ(p, v({0, 0}));
  EXPECT_EQ(q, v({1, 0}));

  EXPECT_THROW(admissible_to_pair(g, {0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(admissible_to_pair(g, {1, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(admissible_to_pair(g, {1, -1}), std::invalid_argument);
}

TEST(AdmissibleToPair, PairComesBackAsTheDifference) {
  const HammingGraph g(3, 3);
  std::mt19937_64 rng(37);
  for (int round = 0; round < 100; ++round) {
    const auto x = random_vertex(g, rng);
    const auto y = random_vertex(g, rng);
    if (x == y) continue;
    const auto xv = one_hot(g, x).vectorization();
    const auto yv = one_hot(g, y).vectorization();
    std::vector<int> z(xv.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = xv[i] - yv[i];
    ASSERT_TRUE(hamres::is_admissible(g, z));
    const auto [p, q] = admissible_to_pair(g, z);
    // Fill-in symbols for zero blocks may differ from x, y, but the pair
    // must disagree in exactly the nonzero blocks.
    for (std::size_t j = 0; j < g.k(); ++j)
      EXPECT_EQ(p.symbols[j] != q.symbols[j], x.symbols[j] != y.symbols[j]);
  }
}

TEST(Embed, DistanceVectorFixture) {
  const HammingGraph g(3, 2);
  const std::vector<Vertex> refs = {v({0, 0, 1}), v({0, 1, 0}),
                                    v({1, 0, 0})};
  const auto rows = embed(g, refs, {v({0, 0, 0})});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], (hamres::DistanceVector{1, 1, 1}));

  const auto more = embed(g, refs, {v({0, 0, 1}), v({1, 1, 1})});
  EXPECT_EQ(more[0], (hamres::DistanceVector{0, 2, 2}));
  EXPECT_EQ(more[1], (hamres::DistanceVector{2, 2, 2}));
}

TEST(Embed, InjectiveExactlyWhenResolving) {
  const HammingGraph g(3, 2);
  const auto verts = g.all_vertices();
  std::mt19937_64 rng(29);
  for (int round = 0; round < 40; ++round) {
    std::vector<Vertex> refs;
    for (const auto& x : verts)
      if (rng() % 3 == 0) refs.push_back(x);
    if (refs.empty()) continue;
    const auto rows = embed(g, refs, verts);
    std::set<hamres::DistanceVector> distinct(rows.begin(), rows.end());
    const bool injective = distinct.size() == rows.size();
    EXPECT_EQ(injective, brute_force_is_resolving(g, refs).resolving);
  }
}

TEST(VertexText, FormatSmallAlphabet) {
  const HammingGraph g(3, 2);
  EXPECT_EQ(format_vertex(g, v({1, 0, 1})), "101");
}

TEST(VertexText, FormatLargeAlphabetUsesCommas) {
  const HammingGraph g(3, 12);
  EXPECT_EQ(format_vertex(g, v({10, 0, 11})), "10,0,11");
}

TEST(VertexText, ParseRoundTrip) {
  for (std::size_t a : {2u, 5u, 10u, 13u}) {
    const HammingGraph g(4, a);
    std::mt19937_64 rng(31 + a);
    for (int round = 0; round < 50; ++round) {
      const auto x = random_vertex(g, rng);
      EXPECT_EQ(parse_vertex(g, format_vertex(g, x)), x);
    }
  }
}

TEST(VertexText, ParseRejectsMalformedWords) {
  const HammingGraph g(3, 2);
  EXPECT_THROW(parse_vertex(g, "10"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(g, "1012"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(g, "102"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(g, "1x1"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(g, ""), std::invalid_argument);
  const HammingGraph big(2, 12);
  EXPECT_THROW(parse_vertex(big, "12,0"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(big, "1,"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(big, "1"), std::invalid_argument);
}

TEST(VertexText, FileRoundTripWithCommentsAndBlanks) {
  const HammingGraph g(3, 2);
  std::istringstream in(
      "# reference set\n"
      "000\n"
      "\n"
      "011   \n"
      "101\n");
  const auto set = parse_vertex_set(g, in);
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set[0], v({0, 0, 0}));
  EXPECT_EQ(set[1], v({0, 1, 1}));
  EXPECT_EQ(set[2], v({1, 0, 1}));

  std::ostringstream out;
  write_vertex_set(g, set, out);
  EXPECT_EQ(out.str(), "000\n011\n101\n");
}

TEST(VertexText, ParseSetReportsLineNumbers) {
  const HammingGraph g(2, 2);
  std::istringstream in("00\n0x\n");
  try {
    parse_vertex_set(g, in);
    FAIL() << "expected parse failure";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}
