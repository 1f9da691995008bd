#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "dsssp/ops.hpp"
#include "dsssp/random_graph.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace dsssp {
namespace {

using testing::kInf;

SparseVector vec(Index n, std::vector<Entry> e, VectorRole role = VectorRole::kDistance) {
  return SparseVector::build(n, e, role);
}

std::vector<std::pair<Index, double>> pairs(const SparseVector& v) {
  std::vector<std::pair<Index, double>> out;
  for (const Entry& e : v.entries()) out.emplace_back(e.index, e.value);
  return out;
}

std::vector<Index> members(const Mask& m) { return {m.indices().begin(), m.indices().end()}; }

std::set<Index> domain(const SparseVector& v) {
  return {v.indices().begin(), v.indices().end()};
}

// --- apply ---

TEST(ApplyTest, ScalarMap) {
  UnaryOp inc{[](double x) { return x + 1.0; }, "x + 1"};
  SparseVector out = apply_vector(vec(3, {{0, 1.0}, {2, 2.0}}), inc);
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{0, 2.0}, {2, 3.0}}));
}

TEST(ApplyTest, EmptyMaskGatesEverything) {
  UnaryOp inc{[](double x) { return x + 1.0; }, "x + 1"};
  EXPECT_TRUE(apply_vector(vec(3, {{0, 1.0}, {2, 2.0}}), inc, Mask(3)).empty());
}

TEST(ApplyTest, MaskSelectsPositions) {
  UnaryOp dbl{[](double x) { return 2.0 * x; }, "2x"};
  SparseVector out = apply_vector(vec(4, {{0, 1.0}, {2, 2.0}, {3, 4.0}}), dbl,
                                  Mask::build(4, {1, 2, 3}));
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{2, 4.0}, {3, 8.0}}));
}

TEST(ApplyTest, PredicateKeepsFalseEntriesAsIntermediate) {
  SparseVector out =
      apply_vector(vec(3, {{0, 1.0}, {2, 5.0}}), UnaryPredicate::greater_than(2.0));
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{0, 0.0}, {2, 1.0}}));
}

TEST(ApplyTest, DimensionMismatch) {
  UnaryOp id{[](double x) { return x; }, "x"};
  EXPECT_THROW(apply_vector(vec(3, {}), id, Mask(4)), DimensionMismatch);
}

// --- filter ---

TEST(FilterVectorTest, HalfOpenRange) {
  Mask m = filter_vector(vec(4, {{0, 0.0}, {3, 1.5}}), UnaryPredicate::closed_open(1.0, 2.0));
  EXPECT_EQ(members(m), (std::vector<Index>{3}));
}

TEST(FilterVectorTest, EmptyInput) {
  EXPECT_TRUE(filter_vector(vec(4, {}), UnaryPredicate::greater_than(1.0)).empty());
}

TEST(FilterVectorTest, BucketZeroOfWidthOne) {
  // Bucket 0, delta 1: 0 <= x < 1 holds for 0.0 and 0.5, not for 1.0.
  Mask m = filter_vector(vec(3, {{0, 0.0}, {1, 1.0}, {2, 0.5}}),
                         UnaryPredicate::closed_open(0.0, 1.0));
  EXPECT_EQ(members(m), (std::vector<Index>{0, 2}));
}

// Equivalent to the two-call apply idiom: evaluate, then keep the true ones.
TEST(FilterVectorTest, SubsetOfDomainAndMatchesTwoCallIdiom) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    SparseVector v = testing::random_vector(rng, 30, 0.4);
    UnaryPredicate p = UnaryPredicate::closed_open(2.0, 6.0);
    Mask m = filter_vector(v, p);
    SparseVector flags = apply_vector(v, p);
    std::vector<Index> truths;
    for (const Entry& e : flags.entries()) {
      if (e.value != 0.0) truths.push_back(e.index);
    }
    EXPECT_EQ(members(m), truths);
    for (Index i : m.indices()) EXPECT_TRUE(v.contains(i));
  }
}

TEST(FilterMatrixTest, KeepsSatisfyingEntries) {
  std::vector<Triple> in = {{0, 1, 2.0}, {1, 2, 0.5}};
  SparseMatrix a = SparseMatrix::build(3, in);
  EXPECT_EQ(filter_matrix(a, UnaryPredicate::greater_than(1.0)).triples(),
            (std::vector<Triple>{{0, 1, 2.0}}));
  EXPECT_TRUE(filter_matrix(a, UnaryPredicate::always_true()).same_entries(a));
}

TEST(FilterMatrixTest, UnitWeightsWithDeltaOne) {
  RandomGraphSpec spec{.vertices = 40, .edges = 200, .weights = WeightKind::kUnit};
  SparseMatrix a = random_graph(spec, 2);
  EXPECT_EQ(filter_matrix(a, UnaryPredicate::greater_than(1.0)).nnz(), 0u);
  EXPECT_TRUE(filter_matrix(a, UnaryPredicate::open_closed(0.0, 1.0)).same_entries(a));
}

TEST(FilterMatrixTest, LightHeavyPartitionIsExact) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> delta_dist(0.05, 12.0);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomGraphSpec spec{.vertices = 30, .edges = 150,
                         .weights = seed % 2 ? WeightKind::kReal : WeightKind::kInteger};
    SparseMatrix a = random_graph(spec, seed);
    const double delta = seed % 10 == 0 ? 3.0 : delta_dist(rng);
    auto light = filter_matrix(a, UnaryPredicate::open_closed(0.0, delta)).triples();
    auto heavy = filter_matrix(a, UnaryPredicate::greater_than(delta)).triples();
    std::vector<Triple> both = light;
    both.insert(both.end(), heavy.begin(), heavy.end());
    std::sort(both.begin(), both.end(), [](const Triple& x, const Triple& y) {
      return std::tie(x.row, x.col) < std::tie(y.row, y.col);
    });
    EXPECT_EQ(both, a.triples());
    EXPECT_EQ(light.size() + heavy.size(), a.nnz());
  }
}

// --- eWiseAdd ---

TEST(EwiseAddTest, UnionWithPassThrough) {
  SparseVector out = ewise_add_vector(vec(3, {{0, 3.0}}), vec(3, {{0, 1.0}, {1, 4.0}}),
                                      BinaryOp::min());
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{0, 1.0}, {1, 4.0}}));
}

TEST(EwiseAddTest, ComparisonPassesLoneValueThrough) {
  SparseVector t_req = vec(3, {{1, 2.0}});
  SparseVector t = vec(3, {{1, 5.0}, {2, 1.0}});
  SparseVector out = ewise_add_vector(t_req, t, BinaryOp::less_than());
  // Index 2 is absent from t_req; the value of t rides through unchanged.
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{1, 1.0}, {2, 1.0}}));
}

TEST(EwiseAddTest, OutputMaskRemovesPassThrough) {
  SparseVector t_req = vec(3, {{1, 2.0}});
  SparseVector t = vec(3, {{1, 5.0}, {2, 1.0}});
  SparseVector out =
      ewise_add_vector(t_req, t, BinaryOp::less_than(), Mask::structure_of(t_req));
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{1, 1.0}}));
}

TEST(EwiseAddTest, FalseComparisonsAreNotStored) {
  SparseVector out =
      ewise_add_vector(vec(2, {{0, 5.0}}), vec(2, {{0, 2.0}}), BinaryOp::less_than());
  EXPECT_TRUE(out.empty());
  EXPECT_TRUE(out.check_invariants());
}

TEST(EwiseAddTest, UnionLawAndPassThroughOnRandomVectors) {
  std::mt19937_64 rng(31);
  const BinaryOp ops[] = {BinaryOp::min(), BinaryOp::plus(), BinaryOp::times()};
  for (int trial = 0; trial < 500; ++trial) {
    SparseVector u = testing::random_vector(rng, 25, 0.3, 1.0, 9.0);
    SparseVector v = testing::random_vector(rng, 25, 0.3, 1.0, 9.0);
    for (const BinaryOp& op : ops) {
      SparseVector out = ewise_add_vector(u, v, op);
      std::set<Index> want = domain(u);
      want.insert(v.indices().begin(), v.indices().end());
      EXPECT_EQ(domain(out), want);
      for (const Entry& e : u.entries()) {
        if (!v.contains(e.index)) EXPECT_EQ(out.get(e.index), e.value) << op.description;
      }
      for (const Entry& e : v.entries()) {
        if (!u.contains(e.index)) EXPECT_EQ(out.get(e.index), e.value) << op.description;
      }
    }
    // Non-commutative op: lone entries still pass through untouched.
    SparseVector cmp = ewise_add_vector(u, v, BinaryOp::less_than());
    for (const Entry& e : u.entries()) {
      if (!v.contains(e.index)) EXPECT_EQ(cmp.get(e.index), e.value);
    }
  }
}

TEST(EwiseAddTest, DimensionMismatch) {
  EXPECT_THROW(ewise_add_vector(vec(3, {}), vec(4, {}), BinaryOp::min()), DimensionMismatch);
  EXPECT_THROW(ewise_add_vector(vec(3, {}), vec(3, {}), BinaryOp::min(), Mask(2)),
               DimensionMismatch);
}

// --- eWiseMult ---

TEST(EwiseMultTest, MaskSelect) {
  SparseVector out = ewise_mult_vector(vec(3, {{0, 2.0}, {1, 3.0}}),
                                       vec(3, {{1, 1.0}}, VectorRole::kBoolean),
                                       BinaryOp::times());
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{1, 3.0}}));
}

TEST(EwiseMultTest, DisjointDomains) {
  EXPECT_TRUE(ewise_mult_vector(vec(4, {{0, 1.0}}), vec(4, {{2, 1.0}}), BinaryOp::times())
                  .empty());
}

TEST(EwiseMultTest, SourceSelectionAtFirstIteration) {
  SparseVector out = ewise_mult_vector(vec(3, {{0, 0.0}}), Mask::build(3, {0}).as_vector(),
                                       BinaryOp::times());
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{0, 0.0}}));
}

TEST(EwiseMultTest, IntersectionLawOnRandomVectors) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    SparseVector u = testing::random_vector(rng, 25, 0.5, 1.0, 9.0);
    SparseVector v = testing::random_vector(rng, 25, 0.5, 1.0, 9.0);
    SparseVector out = ewise_mult_vector(u, v, BinaryOp::plus());
    std::set<Index> want;
    for (Index i : u.indices()) {
      if (v.contains(i)) want.insert(i);
    }
    EXPECT_EQ(domain(out), want);
    for (const Entry& e : out.entries()) EXPECT_EQ(e.value, *u.get(e.index) + *v.get(e.index));
  }
}

// --- vxm ---

TEST(VxmTest, RelaxFromSource) {
  std::vector<Triple> in = {{0, 1, 2.0}, {0, 3, 7.0}};
  SparseMatrix a = SparseMatrix::build(4, in);
  SparseVector out = vxm_min_plus(vec(4, {{0, 0.0}}), a.transpose());
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{1, 2.0}, {3, 7.0}}));
}

TEST(VxmTest, EmptyVectorAnnihilates) {
  std::vector<Triple> in = {{0, 1, 2.0}};
  SparseMatrix a = SparseMatrix::build(2, in);
  EXPECT_TRUE(vxm_min_plus(vec(2, {}), a.transpose()).empty());
}

TEST(VxmTest, ColumnMinReduction) {
  // min(0 + 5, 1 + 3) = 4
  std::vector<Triple> in = {{0, 2, 5.0}, {1, 2, 3.0}};
  SparseMatrix a = SparseMatrix::build(3, in);
  SparseVector out = vxm_min_plus(vec(3, {{0, 0.0}, {1, 1.0}}), a.transpose());
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{2, 4.0}}));
}

TEST(VxmTest, MaskDropsPositions) {
  std::vector<Triple> in = {{0, 1, 2.0}, {0, 3, 7.0}};
  SparseMatrix a = SparseMatrix::build(4, in);
  SparseVector out = vxm_min_plus(vec(4, {{0, 0.0}}), a.transpose(), Mask::build(4, {3}));
  EXPECT_EQ(pairs(out), (std::vector<std::pair<Index, double>>{{3, 7.0}}));
}

TEST(VxmTest, DimensionMismatch) {
  SparseMatrix a(3);
  EXPECT_THROW(vxm_min_plus(vec(4, {}), a.transpose()), DimensionMismatch);
}

TEST(VxmTest, MatchesDenseTripleLoop) {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Index n = std::uniform_int_distribution<Index>(1, 20)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 4 * n)(rng);
    RandomGraphSpec spec{.vertices = n, .edges = m,
                         .weights = seed % 2 ? WeightKind::kReal : WeightKind::kInteger};
    SparseMatrix a = random_graph(spec, seed);
    SparseVector v = testing::random_vector(rng, n, 0.4);
    std::vector<double> want =
        testing::brute_force_vxm(testing::dense_of(v), testing::dense_adjacency(a));
    EXPECT_EQ(testing::dense_of(vxm_min_plus(v, a.transpose())), want) << "seed " << seed;
  }
}

TEST(VxmTest, GenericSemiringPlusTimes) {
  // y = x A over (+, x): y[2] = 2*5 + 3*1
  std::vector<Triple> in = {{0, 2, 5.0}, {1, 2, 1.0}, {0, 1, 4.0}};
  SparseMatrix a = SparseMatrix::build(3, in);
  SparseVector x = vec(3, {{0, 2.0}, {1, 3.0}}, VectorRole::kValue);
  SparseVector y = vxm<PlusTimes>(x, a.transpose(), nullptr, VectorRole::kValue);
  EXPECT_EQ(pairs(y), (std::vector<std::pair<Index, double>>{{1, 8.0}, {2, 13.0}}));
}

TEST(BinaryOpTest, CommutativityFlagsHold) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (const BinaryOp& op : {BinaryOp::min(), BinaryOp::plus(), BinaryOp::times()}) {
    ASSERT_TRUE(op.commutative);
    for (int k = 0; k < 200; ++k) {
      double a = u(rng), b = u(rng);
      EXPECT_EQ(op(a, b), op(b, a)) << op.description;
    }
  }
  EXPECT_FALSE(BinaryOp::less_than().commutative);
}

}  // namespace
}  // namespace dsssp
