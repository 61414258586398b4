#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normbound/lattice.hpp"
#include "normbound/newton.hpp"

namespace normbound {

enum class FiltrationKind { Powers, ClosurePowers };

/// Length: λ(R/D_n), needs an m-primary ideal. Degree: deg(R/D_n) summed over
/// the minimal primes of maximal dimension.
enum class DegreeMode { Length, Degree };

/// The filtration n -> I^n or n -> closure(I^n) together with the function
/// used to measure R/D_n.
class FiltrationProvider {
 public:
  FiltrationProvider(const MonomialIdeal& ideal, FiltrationKind kind, DegreeMode mode);

  const MonomialIdeal& ideal() const { return ideal_; }
  FiltrationKind kind() const { return kind_; }
  DegreeMode mode() const { return mode_; }
  /// Degree of the eventual polynomial: d in length mode, ht I in degree mode.
  int polynomial_degree() const;
  std::string describe() const;

  /// Values for n = first..last.
  std::vector<Integer> values(int first, int last) const;

 private:
  MonomialIdeal ideal_;
  FiltrationKind kind_;
  DegreeMode mode_;
  std::vector<CoordinatePrime> primes_;
  std::optional<NewtonPolyhedron> polyhedron_;
};

/// Samples n = 1..size() of a Hilbert–Samuel type function.
struct HilbertTable {
  std::string provider;
  std::vector<Integer> values;

  int size() const { return static_cast<int>(values.size()); }
  const Integer& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

HilbertTable sample(const FiltrationProvider& provider, int count);

/// H(n) = Σ_i (-1)^i e_i C(n + degree - 1 - i, degree - i), valid for n >= n0.
struct FittedPolynomial {
  int degree = 0;
  std::vector<Integer> coefficients;  // e_0 .. e_degree
  int stabilization_index = 1;        // n0
  int window = 0;                     // constant degree-th differences observed from n0
  int samples = 0;                    // table length used

  const Integer& e(int i) const { return coefficients.at(static_cast<std::size_t>(i)); }
  Integer evaluate(std::int64_t n) const;
};

/// Exact fit in the binomial basis. Requires at least `window` constant
/// degree-th differences in the tail of the table; NotStabilized otherwise or
/// when the solved coefficients are not integers.
FittedPolynomial fit(const HilbertTable& table, int degree, int window);

struct HilbertConfig {
  int fit_budget = 64;
  std::optional<int> window;  // default: degree + 2
  int validation_samples = 2;
};

/// Samples with N = 2(degree + 3), doubling on NotStabilized up to the budget.
FittedPolynomial fit_filtration(const FiltrationProvider& provider, const HilbertConfig& config = {});

/// e_i(I) from λ(R/I^n); m-primary only.
FittedPolynomial hilbert_coefficients(const MonomialIdeal& ideal, const HilbertConfig& config = {});
/// ē_i(I) from λ(R/closure(I^n)); m-primary only.
FittedPolynomial normalized_coefficients(const MonomialIdeal& ideal, const HilbertConfig& config = {});

struct ECoefficients {
  Integer e0;
  Integer e1;
  FittedPolynomial direct;  // fit of deg(R/D_n) on the whole ring
  std::vector<std::pair<CoordinatePrime, FittedPolynomial>> local;  // per top prime
};

/// E_0, E_1 (or their closure versions) computed twice: by fitting the
/// degree function and by summing local fits over the top primes. The two
/// must agree exactly; a mismatch raises InvariantViolation.
ECoefficients E_coefficients(const MonomialIdeal& ideal, bool closure, const HilbertConfig& config = {});

}  // namespace normbound
