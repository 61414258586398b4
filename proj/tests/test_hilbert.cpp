#include <gtest/gtest.h>

#include <random>

#include "normbound/hilbert.hpp"
#include "oracles.hpp"

using namespace normbound;

namespace {

HilbertTable table(std::vector<int> v) {
  HilbertTable t{"fixture", {}};
  for (int x : v) t.values.emplace_back(x);
  return t;
}

std::vector<Integer> ints(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(FiltrationProvider, SpecExamples) {
  const auto x2y2 = make_ideal({{2, 0}, {0, 2}});
  EXPECT_EQ(FiltrationProvider(x2y2, FiltrationKind::ClosurePowers, DegreeMode::Length).values(1, 3),
            ints({3, 10, 21}));
  EXPECT_EQ(FiltrationProvider(make_ideal({{1, 0}, {0, 1}}), FiltrationKind::Powers, DegreeMode::Length).values(1, 3),
            ints({1, 3, 6}));
  const auto m2z = make_ideal({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  EXPECT_EQ(FiltrationProvider(m2z, FiltrationKind::ClosurePowers, DegreeMode::Degree).values(1, 3),
            ints({3, 10, 21}));
  EXPECT_THROW(FiltrationProvider(m2z, FiltrationKind::Powers, DegreeMode::Length), NotPrimary);
}

TEST(Fit, SpecTables) {
  // Short tables need a reduced confirmation window.
  const auto a = fit(table({3, 10, 21, 36, 55}), 2, 2);
  EXPECT_EQ(a.e(0), 4);
  EXPECT_EQ(a.e(1), 1);
  const auto b = fit(table({1, 3, 6, 10}), 2, 2);
  EXPECT_EQ(b.e(0), 1);
  EXPECT_EQ(b.e(1), 0);
  const auto c = fit(table({4, 12, 24, 40}), 2, 2);
  EXPECT_EQ(c.e(0), 4);
  EXPECT_EQ(c.e(1), 0);
}

TEST(Fit, StabilizationIndexAndWindow) {
  // H(n) = n^2 for n >= 3, distorted below.
  const auto f = fit(table({0, 0, 9, 16, 25, 36, 49, 64}), 2, 3);
  EXPECT_EQ(f.stabilization_index, 3);
  EXPECT_EQ(f.evaluate(10), 100);
  EXPECT_THROW(fit(table({0, 0, 9, 16, 25, 36, 49, 64}), 2, 5), NotStabilized);
  EXPECT_THROW(fit(table({1, 2}), 2, 1), NotStabilized);
}

TEST(Fit, IntegerTablesGiveIntegerCoefficients) {
  // The binomial basis spans exactly the integer-valued polynomials.
  const auto f = fit(table({1, 3, 5, 8, 12, 17, 23}), 2, 3);
  EXPECT_EQ(f.stabilization_index, 2);
  EXPECT_EQ(f.coefficients, ints({1, 1, 2}));
  EXPECT_EQ(f.evaluate(8), 30);
}

TEST(HilbertCoefficients, SpecExamples) {
  const auto a = hilbert_coefficients(make_ideal({{2, 0}, {0, 2}}));
  EXPECT_EQ(a.e(0), 4);
  EXPECT_EQ(a.e(1), 0);
  const auto b = hilbert_coefficients(make_ideal({{1, 0}, {0, 1}}));
  EXPECT_EQ(b.e(0), 1);
  EXPECT_EQ(b.e(1), 0);
  const auto c = hilbert_coefficients(make_ideal({{3, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(c.e(0), 5);
  EXPECT_EQ(c.e(1), 1);
  EXPECT_THROW(hilbert_coefficients(make_ideal({{1, 1}})), NotPrimary);
}

TEST(NormalizedCoefficients, SpecExamples) {
  const auto a = normalized_coefficients(make_ideal({{2, 0}, {0, 2}}));
  EXPECT_EQ(a.e(0), 4);
  EXPECT_EQ(a.e(1), 1);
  const auto b = normalized_coefficients(make_ideal({{1, 0}, {0, 1}}));
  EXPECT_EQ(b.e(0), 1);
  EXPECT_EQ(b.e(1), 0);
  const auto c = normalized_coefficients(make_ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(c.e(0), 8);
  EXPECT_EQ(c.e(1), 4);
}

TEST(ECoefficients, SpecExamples) {
  const auto m2z = make_ideal({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  const auto e = E_coefficients(m2z, false);
  EXPECT_EQ(e.e0, 4);
  EXPECT_EQ(e.e1, 1);
  ASSERT_EQ(e.local.size(), 1u);

  const auto x = E_coefficients(make_ideal({{1, 0}}), false);
  EXPECT_EQ(x.e0, 1);
  EXPECT_EQ(x.e1, 0);

  const auto primary = make_ideal({{3, 0}, {1, 1}, {0, 2}});
  const auto ep = E_coefficients(primary, false);
  const auto h = hilbert_coefficients(primary);
  EXPECT_EQ(ep.e0, h.e(0));
  EXPECT_EQ(ep.e1, h.e(1));
  const auto epbar = E_coefficients(primary, true);
  const auto hbar = normalized_coefficients(primary);
  EXPECT_EQ(epbar.e0, hbar.e(0));
  EXPECT_EQ(epbar.e1, hbar.e(1));
}

TEST(FitBudget, ExhaustionRaisesNotStabilized) {
  HilbertConfig tiny;
  tiny.fit_budget = 3;
  try {
    hilbert_coefficients(make_ideal({{2, 0}, {0, 2}}), tiny);
    FAIL() << "expected NotStabilized";
  } catch (const NotStabilized& e) {
    EXPECT_EQ(e.budget(), 3);
  }
}

TEST(Sample, MonotoneTable) {
  const auto t = sample(FiltrationProvider(make_ideal({{2, 0}, {0, 2}}), FiltrationKind::Powers, DegreeMode::Length), 3);
  EXPECT_EQ(t.values, ints({4, 12, 24}));
}

// Properties against brute force.

TEST(HilbertProperty, CoefficientsMatchInterpolation) {
  // Interpolate brute-force colengths of sum-enumerated powers well past
  // the stabilization point.
  auto check = [](const MonomialIdeal& i) {
    const auto pts = oracle::points(i);
    const int d = i.dimension();
    const int first = 6;
    std::vector<Integer> values;
    for (int n = 1; n <= first + d; ++n) values.push_back(oracle::colength(oracle::power_by_sums(pts, n)));
    const auto [e0, e1] = oracle::interpolated_e0_e1(values, first, d);
    const auto fit = hilbert_coefficients(i);
    EXPECT_EQ(Rational(fit.e(0)), e0) << i;
    EXPECT_EQ(Rational(fit.e(1)), e1) << i;
  };
  for (const auto& i : oracle::all_two_variable(3)) check(i);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 6; ++trial) check(oracle::random_three_variable(rng, 2));
}

TEST(HilbertProperty, NormalizedCoefficientsMatchInterpolation) {
  auto check = [](const MonomialIdeal& i) {
    const auto pts = oracle::points(i);
    const int d = i.dimension();
    const int first = 5;
    std::vector<Integer> values;
    for (int n = 1; n <= first + d; ++n) values.push_back(oracle::colength(oracle::closure_generators(pts, n)));
    const auto [e0, e1] = oracle::interpolated_e0_e1(values, first, d);
    const auto fit = normalized_coefficients(i);
    EXPECT_EQ(Rational(fit.e(0)), e0) << i;
    EXPECT_EQ(Rational(fit.e(1)), e1) << i;
  };
  for (const auto& i : oracle::all_two_variable(3)) check(i);
}

TEST(HilbertProperty, DegreeRouteMatchesLocalSum) {
  // E_coefficients asserts the two routes agree; exercise it on
  // equimultiple non-primary ideals.
  const std::vector<MonomialIdeal> cases{
      make_ideal({{2, 0, 1}, {0, 3, 0}}),
      make_ideal({{1, 1, 0}}),
      make_ideal({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}),
      make_ideal({{3, 0, 0}, {1, 2, 0}, {0, 3, 0}}),
      make_ideal({{2, 0, 0}, {0, 0, 2}}),
  };
  for (const auto& i : cases) {
    for (bool closure : {false, true}) {
      const auto e = E_coefficients(i, closure);
      Integer e0 = 0;
      for (const auto& [p, poly] : e.local) e0 += poly.e(0);
      EXPECT_EQ(e.e0, e0) << i;
    }
  }
}
