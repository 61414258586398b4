#include <gtest/gtest.h>

#include <random>

#include "normbound/newton.hpp"
#include "oracles.hpp"

using namespace normbound;

namespace {

Facet facet(std::vector<Exponent> normal, Exponent offset) { return Facet{std::move(normal), offset}; }

}  // namespace

TEST(NewtonPolyhedron, SpecExamples) {
  const NewtonPolyhedron a(make_ideal({{2, 0}, {0, 2}}));
  EXPECT_EQ(a.vertices(), (std::vector<ExponentVector>{{0, 2}, {2, 0}}));
  EXPECT_EQ(a.facets(), (std::vector<Facet>{facet({1, 1}, 2)}));

  const NewtonPolyhedron b(make_ideal({{3, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(b.vertices(), (std::vector<ExponentVector>{{0, 2}, {1, 1}, {3, 0}}));
  auto facets = b.facets();
  std::sort(facets.begin(), facets.end());
  EXPECT_EQ(facets, (std::vector<Facet>{facet({1, 1}, 2), facet({1, 2}, 3)}));

  const NewtonPolyhedron c(make_ideal({{1, 0}}));
  EXPECT_EQ(c.vertices(), (std::vector<ExponentVector>{{1, 0}}));
  EXPECT_EQ(c.facets(), (std::vector<Facet>{facet({1, 0}, 1)}));
}

TEST(NewtonPolyhedron, DimensionCap) {
  const auto i = make_ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_THROW(NewtonPolyhedron(i, 2), DimensionCap);
  EXPECT_THROW(NewtonPolyhedron(make_ideal({{0, 0}})), UnitIdeal);
}

TEST(ClosureMember, SpecExamples) {
  const NewtonPolyhedron a(make_ideal({{2, 0}, {0, 2}}));
  EXPECT_TRUE(closure_member(a, {1, 1}, 1));
  EXPECT_FALSE(closure_member(a, {1, 0}, 1));
  const NewtonPolyhedron b(make_ideal({{3, 0}, {1, 1}, {0, 2}}));
  EXPECT_FALSE(closure_member(b, {2, 0}, 1));
}

TEST(IntegralClosurePower, SpecExamples) {
  EXPECT_EQ(integral_closure_power(make_ideal({{2, 0}, {0, 2}}), 1), make_ideal({{2, 0}, {1, 1}, {0, 2}}));
  const auto closed = make_ideal({{3, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(integral_closure_power(closed, 1), closed);
  const auto m = make_ideal({{1, 0}, {0, 1}});
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(integral_closure_power(m, k), power(m, k));
}

TEST(VertexReduction, SpecExamples) {
  EXPECT_EQ(vertex_reduction(make_ideal({{2, 0}, {1, 1}, {0, 2}})), make_ideal({{2, 0}, {0, 2}}));
  EXPECT_EQ(vertex_reduction(make_ideal({{2, 0}, {0, 2}})), make_ideal({{2, 0}, {0, 2}}));
  EXPECT_EQ(vertex_reduction(make_ideal({{3, 0}, {1, 1}, {0, 2}})), make_ideal({{3, 0}, {1, 1}, {0, 2}}));
}

TEST(VolumeOracle, SpecExamples) {
  EXPECT_EQ(multiplicity_volume_oracle(make_ideal({{2, 0}, {0, 2}})), 4);
  EXPECT_EQ(multiplicity_volume_oracle(make_ideal({{3, 0}, {1, 1}, {0, 2}})), 5);
  EXPECT_EQ(multiplicity_volume_oracle(make_ideal({{1, 0}, {0, 1}})), 1);
  EXPECT_EQ(multiplicity_volume_oracle(make_ideal({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})), 30);
  EXPECT_THROW(multiplicity_volume_oracle(make_ideal({{1, 1}})), NotPrimary);
}

TEST(RootOracle, SpecExamples) {
  const auto i = make_ideal({{2, 0}, {0, 2}});
  const auto hit = closure_member_root_oracle(i, {1, 1}, 2);
  EXPECT_TRUE(hit.member);
  EXPECT_EQ(hit.witness_power, 2);
  const auto miss = closure_member_root_oracle(i, {1, 0}, 8);
  EXPECT_FALSE(miss.member);
  EXPECT_EQ(miss.witness_power, std::nullopt);
  EXPECT_TRUE(closure_member_root_oracle(make_ideal({{1, 0}, {0, 1}}), {1, 0}, 1).member);
}

TEST(ClosureFiltration, CachesStableReferences) {
  const ClosureFiltration f(make_ideal({{2, 0}, {0, 2}}));
  const MonomialIdeal* first = &f.at(3);
  EXPECT_EQ(first, &f.at(3));
  EXPECT_EQ(f.at(2), power(make_ideal({{1, 0}, {0, 1}}), 4));
}

// Properties against brute force.

TEST(NewtonProperty, FacetMembershipMatchesLpAndRootTest) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto i = oracle::random_three_variable(rng, 3);
    const NewtonPolyhedron np(i);
    const auto pts = oracle::points(i);
    for (int n = 1; n <= 3; ++n) {
      Exponent top = 0;
      for (const auto& g : pts)
        for (auto e : g) top = std::max(top, e);
      for (Exponent a = 0; a <= top * n; a += 1 + trial % 2)
        for (Exponent b = 0; b <= top * n; b += 2)
          for (Exponent c = 0; c <= top * n; c += 3) {
            const ExponentVector v{a, b, c};
            const bool facet = np.contains(v, n);
            ASSERT_EQ(facet, oracle::lp_member(pts, {a, b, c}, n)) << i << " v=" << v << " n=" << n;
          }
    }
  }
}

TEST(NewtonProperty, PositiveRootTestImpliesFacetMembership) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<Exponent> e(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto i = oracle::random_three_variable(rng, 3);
    const NewtonPolyhedron np(i);
    const ExponentVector v{e(rng), e(rng), e(rng)};
    const auto root = closure_member_root_oracle(i, v, 4);
    if (root.member) EXPECT_TRUE(np.contains(v, 1)) << i << " v=" << v;
    if (!np.contains(v, 1)) EXPECT_FALSE(root.member);
  }
}

TEST(NewtonProperty, ClosureGeneratorsMatchBoxEnumeration) {
  for (const auto& i : oracle::all_two_variable(3))
    for (int n = 1; n <= 2; ++n)
      EXPECT_EQ(oracle::points(integral_closure_power(i, n)), oracle::closure_generators(oracle::points(i), n))
          << i << " n=" << n;
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto i = oracle::random_three_variable(rng, 2);
    EXPECT_EQ(oracle::points(integral_closure_power(i, 2)), oracle::closure_generators(oracle::points(i), 2)) << i;
  }
}

TEST(NewtonProperty, ClosureColengthMatchesGenerators) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto i = oracle::random_three_variable(rng, 4);
    const NewtonPolyhedron np(i);
    for (int n = 1; n <= 3; ++n)
      EXPECT_EQ(closure_colength(np, n), oracle::colength(oracle::points(integral_closure_power(np, n)))) << i;
  }
}

TEST(NewtonProperty, VolumeMatchesShoelace) {
  for (const auto& i : oracle::all_two_variable(5))
    EXPECT_EQ(multiplicity_volume_oracle(i), oracle::shoelace_e0(oracle::points(i))) << i;
}

TEST(NewtonProperty, VolumeOfSimplexIdeals) {
  // (x^a, y^b, z^c): d! vol = abc
  for (Exponent a = 1; a <= 3; ++a)
    for (Exponent b = 1; b <= 3; ++b)
      for (Exponent c = 1; c <= 3; ++c)
        EXPECT_EQ(multiplicity_volume_oracle(make_ideal({{a, 0, 0}, {0, b, 0}, {0, 0, c}})), Integer(a * b * c));
}
