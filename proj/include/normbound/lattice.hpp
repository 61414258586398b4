#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "normbound/exact.hpp"

namespace normbound {

/// Ambient polynomial ring k[x_1..x_d]. Only regular rings of type 1 are
/// supported; the fields exist so reports can state which branch of each
/// bound applies.
struct RingDescriptor {
  std::vector<std::string> variables;
  int type = 1;
  bool regular = true;

  int dimension() const { return static_cast<int>(variables.size()); }

  /// Validates names (nonempty, distinct) and d >= 1.
  static RingDescriptor make(std::vector<std::string> names);
  /// x, y, z, w for d <= 4, otherwise x1..xd.
  static RingDescriptor standard(int d);

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Exponent vector of a monomial x^v.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<Exponent> coords);
  ExponentVector(std::initializer_list<Exponent> coords);
  static ExponentVector zero(std::size_t d) { return ExponentVector(std::vector<Exponent>(d, 0)); }

  std::size_t size() const { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Exponent> coords() const { return coords_; }

  bool is_zero() const;
  Exponent total_degree() const;
  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;
  /// Indices with a nonzero entry.
  std::vector<int> support() const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector scaled(Exponent k) const;
  /// Keeps only the listed coordinates, in the given order.
  ExponentVector restricted(std::span<const int> indices) const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> coords_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

/// Prime generated by a subset of the variables. Always has deg(R/p) = 1.
struct CoordinatePrime {
  std::vector<int> variables;  // sorted ambient indices

  int height() const { return static_cast<int>(variables.size()); }
  friend auto operator<=>(const CoordinatePrime&, const CoordinatePrime&) = default;
  friend bool operator==(const CoordinatePrime&, const CoordinatePrime&) = default;
};

/// Monomial ideal held by its unique minimal generating set, sorted
/// lexicographically.
class MonomialIdeal {
 public:
  const RingDescriptor& ring() const { return ring_; }
  int dimension() const { return ring_.dimension(); }
  const std::vector<ExponentVector>& generators() const { return generators_; }

  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_zero(); }
  /// Throws UnitIdeal when is_unit().
  void require_proper() const;

  static MonomialIdeal unit(const RingDescriptor& ring);

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators_ == b.generators_ && a.ring_.dimension() == b.ring_.dimension();
  }

 private:
  friend MonomialIdeal minimalize(std::vector<ExponentVector>, const RingDescriptor&);
  MonomialIdeal(RingDescriptor ring, std::vector<ExponentVector> gens)
      : ring_(std::move(ring)), generators_(std::move(gens)) {}

  RingDescriptor ring_;
  std::vector<ExponentVector> generators_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// "x^2*y", or "1" for the zero vector.
std::string monomial_string(const ExponentVector& v, const RingDescriptor& ring);

/// Canonical ideal generated by `gens`. The zero vector yields the unit
/// ideal.
MonomialIdeal minimalize(std::vector<ExponentVector> gens, const RingDescriptor& ring);

/// Convenience: minimalize in the standard ring of the matching dimension.
MonomialIdeal make_ideal(std::initializer_list<std::initializer_list<Exponent>> gens);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int n);

bool contains(const MonomialIdeal& ideal, const ExponentVector& v);
/// Ideal containment a ⊆ b, tested on minimal generators.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// Smallest k with x_i^k in the ideal, if any.
std::optional<Exponent> pure_power(const MonomialIdeal& ideal, int variable);
/// True iff every variable has a pure power in the ideal (height = d).
bool is_primary_to_maximal(const MonomialIdeal& ideal);

/// λ(R/I) for an m-primary ideal; NotPrimary otherwise.
Integer colength(const MonomialIdeal& ideal);

int height(const MonomialIdeal& ideal);
std::vector<CoordinatePrime> minimal_primes(const MonomialIdeal& ideal);
/// Minimal primes of minimal height (those of maximal dimension of R/p).
std::vector<CoordinatePrime> top_primes(const MonomialIdeal& ideal);

/// I_p as a monomial ideal in the variables of p. The unit ideal is returned
/// (not thrown) when p does not contain I.
MonomialIdeal localize(const MonomialIdeal& ideal, const CoordinatePrime& p);

/// deg(R/I) via the associativity formula.
Integer degree(const MonomialIdeal& ideal);

/// 1 + the largest dimension of a compact face of NP(I). Defined with the
/// Newton polyhedron.
int analytic_spread(const MonomialIdeal& ideal);
bool is_equimultiple(const MonomialIdeal& ideal);
bool is_complete_intersection(const MonomialIdeal& ideal);

/// Common total degree of all minimal generators, if they share one.
std::optional<Exponent> generating_degree(const MonomialIdeal& ideal);

}  // namespace normbound
