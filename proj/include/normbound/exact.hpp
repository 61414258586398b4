#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "normbound/error.hpp"

namespace normbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent coordinates. Arithmetic on them goes through the checked helpers
/// below, so overflow is reported instead of wrapping.
using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow();
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}

inline Exponent to_exponent(const Integer& v) {
  if (v > std::numeric_limits<Exponent>::max() || v < std::numeric_limits<Exponent>::min())
    throw Overflow();
  return static_cast<Exponent>(v);
}

/// "p/q" or "p" for integral values.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);

/// Floor division with a positive divisor.
Exponent floor_div(Exponent num, Exponent den);
Exponent ceil_div(Exponent num, Exponent den);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(int n);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over the rationals.
int rank(RationalMatrix rows);

/// Basis of the right null space {w : rows * w = 0}; `cols` is needed when
/// `rows` is empty.
RationalMatrix null_space(RationalMatrix rows, std::size_t cols);

/// Solves the square system A x = b. Throws InvariantViolation if singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple, gcd of entries 1).
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);

}  // namespace normbound
