#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normbound/briancon_skoda.hpp"
#include "normbound/hilbert.hpp"
#include "normbound/lattice.hpp"

namespace normbound {

/// A value that is either present or absent with a stated reason.
template <class T>
struct Field {
  std::optional<T> value;
  std::string reason;  // why the value is absent

  static Field of(T v) { return Field{std::move(v), {}}; }
  static Field absent(std::string why) { return Field{std::nullopt, std::move(why)}; }
  bool present() const { return value.has_value(); }
  const T& operator*() const { return *value; }
};

enum class Relation { LessEqual, Equal, Less };
const char* to_string(Relation r);

struct Check {
  std::string name;
  std::string citation;
  Relation relation = Relation::LessEqual;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  bool holds = false;
  std::optional<std::string> skipped;  // unmet precondition
  bool specialized = false;            // regular-ring degeneration of a more general bound

  bool evaluated() const { return !skipped.has_value(); }
};

Check make_check(std::string name, std::string citation, Relation relation, Rational lhs, Rational rhs);
Check skipped_check(std::string name, std::string citation, Relation relation, std::string reason);

struct NormalityResult {
  bool normal = true;
  int horizon = 1;                         // powers compared: 1..horizon
  std::optional<int> failing_power;
  std::optional<ExponentVector> witness;   // in closure(I^n) but not in I^n
};

/// Compares I^n with closure(I^n) for n <= horizon (default max(d-1, 1)).
/// A monomial ideal in d variables whose first d-1 powers are integrally
/// closed is normal, so the default horizon certifies normality.
NormalityResult normality_check(const MonomialIdeal& ideal, std::optional<int> horizon = std::nullopt);

enum class S2Inference { NormalConsistent, NotNormalE1Gap, S2FailureCertificate };
const char* to_string(S2Inference s);

/// Applies the e1 normality criterion contrapositively. Raises
/// InvariantViolation when I is normal but ē1 != e1.
S2Inference s2_inference(bool normal, const Integer& e1, const Integer& e1bar);

struct AnalysisConfig {
  int max_power = kDefaultBsHorizon;     // Briançon–Skoda horizon
  HilbertConfig hilbert;
  std::optional<int> normality_horizon;  // default max(d-1, 1)
  int dimension_cap = kDefaultDimensionCap;
};

struct Invariants {
  int d = 0;
  int height = 0;
  int analytic_spread = 0;
  bool equimultiple = false;
  bool m_primary = false;
  bool complete_intersection = false;
  bool integrally_closed = false;  // Ī = I

  Field<Integer> e0, e1, e0bar, e1bar;
  Field<Integer> colength, closure_colength;  // λ(R/I), λ(R/Ī)
  Field<Integer> volume_e0;                   // d! · vol of the Newton complement
  Field<Integer> E0, E1, E0bar, E1bar;
  Field<Integer> degree, closure_degree;      // deg(R/I), deg(R/Ī)
  Field<MonomialIdeal> vertex_reduction;
  Field<Integer> E0_reduction, degree_reduction;  // E0(J_V), deg(R/J_V)
  Field<std::optional<Exponent>> generating_degree;

  Field<int> b_emp;
  int bs_horizon = 0;
  int regular_bs_cap = 0;
  Field<int> equimultiple_bs_cap;

  Field<NormalityResult> normality;
  Field<Integer> chain_bound;
  Field<S2Inference> s2;
};

/// Checks from the e1 chain: 0 <= e1 <= ē1 <= (d-1) e0, ē0 = e0 (m-primary)
/// and their equimultiple analogues for E.
std::vector<Check> monotonicity_checks(const Invariants& inv);
Check regular_bound_check(const Invariants& inv);
std::vector<Check> sharpness_checks(const Invariants& inv);
std::vector<Check> equimultiple_checks(const Invariants& inv);

/// ē1 bounds the length of any chain of graded S2 algebras strictly between
/// R[It] and its normalization. m-primary only.
Integer chain_bound(const Invariants& inv);

struct AnalysisReport {
  std::string label;
  MonomialIdeal ideal;
  Invariants invariants;
  std::vector<Check> checks;
  AnalysisConfig config;
  std::vector<std::string> errors;
  bool budget_exhausted = false;
  bool internal_error = false;

  bool any_check_fails() const;
};

/// Computes every invariant and check. Sub-errors are recorded on the report
/// instead of aborting it; a check whose inputs are missing is skipped.
AnalysisReport analyze(const MonomialIdeal& ideal, const AnalysisConfig& config = {}, std::string label = {});

}  // namespace normbound
