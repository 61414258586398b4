#pragma once

// Brute-force reference implementations. None of these call into the engine
// beyond the plain data types, so agreement is meaningful.

#include <optional>
#include <random>
#include <vector>

#include "normbound/exact.hpp"
#include "normbound/lattice.hpp"

namespace oracle {

using normbound::Exponent;
using normbound::ExponentVector;
using normbound::Integer;
using normbound::MonomialIdeal;
using normbound::Rational;

using Point = std::vector<Exponent>;

bool divides(const Point& a, const Point& b);
std::vector<Point> points(const MonomialIdeal& ideal);
bool member(const std::vector<Point>& gens, const Point& v);

/// Minimal elements of a point set by pairwise divisibility.
std::vector<Point> minimal(std::vector<Point> pts);

/// Every sum of n generators (with repetition), minimalized.
std::vector<Point> power_by_sums(const std::vector<Point>& gens, int n);

/// Standard monomials counted in the box below the pure powers.
Integer colength(const std::vector<Point>& gens);

/// Is v/n in conv(gens) + R^d_{>=0}? Decided by an exact phase-one simplex.
bool lp_member(const std::vector<Point>& gens, const Point& v, int n);

/// Minimal generators of closure(I^n) by LP membership over the box
/// [0, n * max exponent]^d.
std::vector<Point> closure_generators(const std::vector<Point>& gens, int n);

/// 2 * area of the region under the lower hull (two variables, m-primary).
Integer shoelace_e0(const std::vector<Point>& gens);

/// e0 and e1 from an exact interpolation of `values` at n = first..first+degree
/// in the monomial basis.
std::pair<Rational, Rational> interpolated_e0_e1(const std::vector<Integer>& values, int first, int degree);

/// Staircase ideal in two variables: x^{a_0} y^{0}, x^{a_1} y^{1}, ... with
/// a strictly decreasing a.
std::vector<Point> staircase(const std::vector<Exponent>& a);

/// Every m-primary monomial ideal in k[x,y] whose minimal generators lie in
/// [0, box]^2.
std::vector<MonomialIdeal> all_two_variable(int box);

/// Random m-primary ideal in three variables with exponents in [0, box].
MonomialIdeal random_three_variable(std::mt19937& rng, int box);

}  // namespace oracle
