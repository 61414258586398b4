#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "normbound/lattice.hpp"

namespace normbound {

inline constexpr int kDefaultDimensionCap = 6;

/// Inequality <normal, v> >= offset with a primitive non-negative integer
/// normal. Coordinate hyperplanes (offset 0) are implicit and not stored.
struct Facet {
  std::vector<Exponent> normal;
  Exponent offset = 0;

  /// Evaluates <normal, v> - level * offset.
  Exponent slack(const ExponentVector& v, Exponent level) const;

  friend auto operator<=>(const Facet&, const Facet&) = default;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// conv(exponents of I) + R^d_{>=0}, held both as its vertex set and as its
/// facet inequalities.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(const MonomialIdeal& ideal, int dimension_cap = kDefaultDimensionCap);

  const MonomialIdeal& ideal() const { return ideal_; }
  int dimension() const { return ideal_.dimension(); }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// v ∈ level · NP(I), i.e. x^v lies in the integral closure of I^level.
  bool contains(const ExponentVector& v, Exponent level = 1) const;

 private:
  MonomialIdeal ideal_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
};

inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal, int dimension_cap = kDefaultDimensionCap) {
  return NewtonPolyhedron(ideal, dimension_cap);
}

inline bool closure_member(const NewtonPolyhedron& np, const ExponentVector& v, Exponent n) {
  return np.contains(v, n);
}

/// Minimal generators of the integral closure of I^n.
MonomialIdeal integral_closure_power(const NewtonPolyhedron& np, int n);
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, int n);

/// λ(R/closure(I^n)) counted directly from the facets, without extracting
/// generators. NotPrimary unless I is m-primary.
Integer closure_colength(const NewtonPolyhedron& np, int n);

/// Ideal generated by the vertices of NP(I): the smallest monomial reduction.
MonomialIdeal vertex_reduction(const MonomialIdeal& ideal);

/// d! · vol(R^d_{>=0} \ NP(I)) for m-primary I, computed from the facet
/// description alone.
Integer multiplicity_volume_oracle(const MonomialIdeal& ideal);

struct RootTestResult {
  bool member = false;                // true certifies membership
  std::optional<int> witness_power;   // the k with k·v ∈ exponents(I^k)
};

/// Searches k = 1..max_k for k·v ∈ I^k. A negative result is inconclusive.
RootTestResult closure_member_root_oracle(const MonomialIdeal& ideal, const ExponentVector& v, int max_k);

/// Memo table n -> closure(I^n). Safe to share between threads; every caller
/// asking for the same n sees the same object.
class ClosureFiltration {
 public:
  explicit ClosureFiltration(const MonomialIdeal& base, int dimension_cap = kDefaultDimensionCap)
      : polyhedron_(base, dimension_cap) {}

  const MonomialIdeal& base() const { return polyhedron_.ideal(); }
  const NewtonPolyhedron& polyhedron() const { return polyhedron_; }
  const MonomialIdeal& at(int n) const;

 private:
  NewtonPolyhedron polyhedron_;
  mutable std::mutex mutex_;
  mutable std::map<int, MonomialIdeal> cache_;
};

namespace detail {
/// vol{x : A x <= b} for a bounded polytope (Lasserre's recursion).
Rational polytope_volume(const RationalMatrix& a, const std::vector<Rational>& b);
}  // namespace detail

}  // namespace normbound
