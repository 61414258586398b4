#include "normbound/verdict.hpp"

#include <algorithm>
#include <functional>

#include "normbound/newton.hpp"

namespace normbound {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::Less: return "<";
  }
  return "?";
}

const char* to_string(S2Inference s) {
  switch (s) {
    case S2Inference::NormalConsistent: return "normal-consistent";
    case S2Inference::NotNormalE1Gap: return "not-normal-e1-gap";
    case S2Inference::S2FailureCertificate: return "s2-failure-certificate";
  }
  return "?";
}

Check make_check(std::string name, std::string citation, Relation relation, Rational lhs, Rational rhs) {
  Check c;
  c.name = std::move(name);
  c.citation = std::move(citation);
  c.relation = relation;
  switch (relation) {
    case Relation::LessEqual: c.holds = lhs <= rhs; break;
    case Relation::Equal: c.holds = lhs == rhs; break;
    case Relation::Less: c.holds = lhs < rhs; break;
  }
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

Check skipped_check(std::string name, std::string citation, Relation relation, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.citation = std::move(citation);
  c.relation = relation;
  c.skipped = std::move(reason);
  return c;
}

namespace {

namespace cite {
constexpr const char* kEChain = "e1-chain endpoints";
constexpr const char* kFiltrationMultiplicity = "filtration multiplicity invariance";
constexpr const char* kClassicalBs = "classical Briancon-Skoda bound";
constexpr const char* kNormalityCriterion = "S2 normality criterion";
constexpr const char* kJacobianBs = "Jacobian Briancon-Skoda bound (equimultiple)";
constexpr const char* kRegularE1bar = "e1bar regular-ring bound";
constexpr const char* kDim2Closed = "integrally closed ideals in dimension 2";
constexpr const char* kEquigenerated = "equigenerated sharpness family";
constexpr const char* kBigEChain = "E1-chain endpoints (equimultiple)";
constexpr const char* kE0Reduction = "E0 via minimal reduction";
constexpr const char* kCiCriterion = "complete intersection criterion";
constexpr const char* kLech = "Lech-type E0 bound";
constexpr const char* kEquimultipleE1bar = "E1bar equimultiple bound (regular specialization)";
constexpr const char* kVolume = "normalized volume of the Newton complement";
}  // namespace cite

// Collects inputs for one check; the first missing one becomes the skip
// reason.
class Inputs {
 public:
  std::optional<Rational> operator()(const Field<Integer>& f, const char* label) {
    if (f.present()) return Rational(*f);
    if (!missing_) missing_ = std::string(label) + " unavailable: " + f.reason;
    return std::nullopt;
  }
  bool ok() const { return !missing_; }
  const std::string& reason() const { return *missing_; }

 private:
  std::optional<std::string> missing_;
};

Rational min_of(const Rational& a, const Rational& b) { return a < b ? a : b; }

constexpr const char* kNotPrimary = "ideal is not m-primary";
constexpr const char* kNotEquimultiple = "ideal is not equimultiple";

}  // namespace

NormalityResult normality_check(const MonomialIdeal& ideal, std::optional<int> horizon) {
  ideal.require_proper();
  NormalityResult r;
  r.horizon = horizon.value_or(std::max(ideal.dimension() - 1, 1));
  if (r.horizon < 1) throw InvalidArgument("normality horizon must be positive");
  const NewtonPolyhedron np(ideal);
  MonomialIdeal p = ideal;
  for (int n = 1; n <= r.horizon; ++n) {
    if (n > 1) p = product(p, ideal);
    const MonomialIdeal closed = integral_closure_power(np, n);
    if (closed == p) continue;
    r.normal = false;
    r.failing_power = n;
    for (const auto& g : closed.generators())
      if (!contains(p, g)) {
        r.witness = g;
        break;
      }
    return r;
  }
  return r;
}

S2Inference s2_inference(bool normal, const Integer& e1, const Integer& e1bar) {
  if (normal) {
    if (e1bar != e1) throw InvariantViolation("normal ideal with e1bar != e1");
    return S2Inference::NormalConsistent;
  }
  return e1bar > e1 ? S2Inference::NotNormalE1Gap : S2Inference::S2FailureCertificate;
}

std::vector<Check> monotonicity_checks(const Invariants& inv) {
  std::vector<Check> out;
  const auto le = Relation::LessEqual;
  const auto eq = Relation::Equal;

  if (!inv.m_primary) {
    for (const char* name : {"e1_nonnegative", "e1_le_e1bar", "e1bar_le_bs_e0"})
      out.push_back(skipped_check(name, cite::kEChain, le, kNotPrimary));
    out.push_back(skipped_check("e0bar_eq_e0", cite::kFiltrationMultiplicity, eq, kNotPrimary));
  } else {
    Inputs in;
    auto e0 = in(inv.e0, "e0");
    auto e1 = in(inv.e1, "e1");
    auto e0bar = in(inv.e0bar, "e0bar");
    auto e1bar = in(inv.e1bar, "e1bar");
    if (!in.ok()) {
      for (const char* name : {"e1_nonnegative", "e1_le_e1bar", "e1bar_le_bs_e0"})
        out.push_back(skipped_check(name, cite::kEChain, le, in.reason()));
      out.push_back(skipped_check("e0bar_eq_e0", cite::kFiltrationMultiplicity, eq, in.reason()));
    } else {
      out.push_back(make_check("e1_nonnegative", cite::kEChain, le, 0, *e1));
      out.push_back(make_check("e1_le_e1bar", cite::kEChain, le, *e1, *e1bar));
      out.push_back(make_check("e1bar_le_bs_e0", cite::kEChain, le, *e1bar, Rational(inv.regular_bs_cap) * *e0));
      out.push_back(make_check("e0bar_eq_e0", cite::kFiltrationMultiplicity, eq, *e0bar, *e0));
    }
  }

  if (!inv.equimultiple) {
    for (const char* name : {"E1_nonnegative", "E1_le_E1bar", "E1bar_le_bs_E0"})
      out.push_back(skipped_check(name, cite::kBigEChain, le, kNotEquimultiple));
    out.push_back(skipped_check("E0bar_eq_E0", cite::kBigEChain, eq, kNotEquimultiple));
    return out;
  }
  Inputs in;
  auto E0 = in(inv.E0, "E0");
  auto E1 = in(inv.E1, "E1");
  auto E0bar = in(inv.E0bar, "E0bar");
  auto E1bar = in(inv.E1bar, "E1bar");
  if (!in.ok()) {
    for (const char* name : {"E1_nonnegative", "E1_le_E1bar", "E1bar_le_bs_E0"})
      out.push_back(skipped_check(name, cite::kBigEChain, le, in.reason()));
    out.push_back(skipped_check("E0bar_eq_E0", cite::kBigEChain, eq, in.reason()));
    return out;
  }
  const Rational cap = inv.equimultiple_bs_cap.present() ? Rational(*inv.equimultiple_bs_cap) : Rational(inv.height - 1);
  out.push_back(make_check("E1_nonnegative", cite::kBigEChain, le, 0, *E1));
  out.push_back(make_check("E1_le_E1bar", cite::kBigEChain, le, *E1, *E1bar));
  out.push_back(make_check("E1bar_le_bs_E0", cite::kBigEChain, le, *E1bar, cap * *E0));
  out.push_back(make_check("E0bar_eq_E0", cite::kBigEChain, eq, *E0bar, *E0));
  return out;
}

Check regular_bound_check(const Invariants& inv) {
  const char* name = "e1bar_regular_bound";
  if (!inv.m_primary) return skipped_check(name, cite::kRegularE1bar, Relation::LessEqual, kNotPrimary);
  Inputs in;
  auto e0 = in(inv.e0, "e0");
  auto e1bar = in(inv.e1bar, "e1bar");
  auto closure_len = in(inv.closure_colength, "closure colength");
  if (!in.ok()) return skipped_check(name, cite::kRegularE1bar, Relation::LessEqual, in.reason());
  const Rational rhs = Rational(inv.d - 1) * min_of(*e0 / 2, *e0 - *closure_len);
  Check c = make_check(name, cite::kRegularE1bar, Relation::LessEqual, *e1bar, rhs);
  c.specialized = true;
  return c;
}

std::vector<Check> sharpness_checks(const Invariants& inv) {
  std::vector<Check> out;
  const auto eq = Relation::Equal;
  const char* closed_names[] = {"dim2_closed_e1", "dim2_closed_e1bar", "dim2_closed_normal"};

  std::optional<std::string> skip_a;
  if (!inv.m_primary)
    skip_a = kNotPrimary;
  else if (inv.d != 2)
    skip_a = "ambient dimension is not 2";
  else if (!inv.integrally_closed)
    skip_a = "ideal is not integrally closed";
  Inputs in;
  std::optional<Rational> e0, e1, e1bar, len;
  if (!skip_a) {
    e0 = in(inv.e0, "e0");
    e1 = in(inv.e1, "e1");
    e1bar = in(inv.e1bar, "e1bar");
    len = in(inv.colength, "colength");
    if (!inv.normality.present()) skip_a = "normality unavailable: " + inv.normality.reason;
    if (!in.ok()) skip_a = in.reason();
  }
  if (skip_a) {
    for (const char* name : closed_names) out.push_back(skipped_check(name, cite::kDim2Closed, eq, *skip_a));
  } else {
    out.push_back(make_check(closed_names[0], cite::kDim2Closed, eq, *e1, *e0 - *len));
    out.push_back(make_check(closed_names[1], cite::kDim2Closed, eq, *e1bar, *e0 - *len));
    out.push_back(make_check(closed_names[2], cite::kDim2Closed, eq, (*inv.normality).normal ? 1 : 0, 1));
  }

  const char* name_b = "equigenerated_e1bar";
  if (!inv.m_primary) {
    out.push_back(skipped_check(name_b, cite::kEquigenerated, eq, kNotPrimary));
  } else if (!inv.generating_degree.present() || !*inv.generating_degree) {
    out.push_back(skipped_check(name_b, cite::kEquigenerated, eq, "generators are not all of one degree"));
  } else {
    Inputs in_b;
    auto e0b = in_b(inv.e0, "e0");
    auto e1barb = in_b(inv.e1bar, "e1bar");
    if (!in_b.ok()) {
      out.push_back(skipped_check(name_b, cite::kEquigenerated, eq, in_b.reason()));
    } else {
      const Rational s = static_cast<long long>(**inv.generating_degree);
      const Rational rhs = Rational(inv.d - 1) / 2 * *e0b * (1 - 1 / s);
      out.push_back(make_check(name_b, cite::kEquigenerated, eq, *e1barb, rhs));
    }
  }
  return out;
}

std::vector<Check> equimultiple_checks(const Invariants& inv) {
  std::vector<Check> out;
  const auto le = Relation::LessEqual;
  const auto eq = Relation::Equal;
  struct Spec {
    const char* name;
    const char* citation;
    Relation rel;
  };
  const Spec specs[] = {
      {"E0_eq_E0_reduction", cite::kE0Reduction, eq},
      {"E0_reduction_eq_degree", cite::kE0Reduction, eq},
      {"ci_iff_E1_zero", cite::kCiCriterion, eq},
      {"E0_le_lech_bound", cite::kLech, le},
      {"E1bar_equimultiple_bound", cite::kEquimultipleE1bar, le},
      {"E1bar_le_lech_form", cite::kEquimultipleE1bar, le},
  };
  auto skip_all = [&](const std::string& reason) {
    for (const auto& s : specs) out.push_back(skipped_check(s.name, s.citation, s.rel, reason));
    return out;
  };
  if (!inv.equimultiple) return skip_all(kNotEquimultiple);
  Inputs in;
  auto E0 = in(inv.E0, "E0");
  auto E1 = in(inv.E1, "E1");
  auto E1bar = in(inv.E1bar, "E1bar");
  auto E0_red = in(inv.E0_reduction, "E0 of the vertex reduction");
  auto deg_red = in(inv.degree_reduction, "degree of the vertex reduction");
  auto deg_closure = in(inv.closure_degree, "closure degree");
  if (!in.ok()) return skip_all(in.reason());

  const int g = inv.height;
  const Rational g_factorial(factorial(g));
  out.push_back(make_check(specs[0].name, specs[0].citation, eq, *E0, *E0_red));
  if (inv.vertex_reduction.present() && is_complete_intersection(*inv.vertex_reduction))
    out.push_back(make_check(specs[1].name, specs[1].citation, eq, *E0_red, *deg_red));
  else
    out.push_back(skipped_check(specs[1].name, specs[1].citation, eq,
                                "vertex reduction is not a complete intersection, hence not minimal"));
  out.push_back(make_check(specs[2].name, specs[2].citation, eq, *E1 == 0 ? 1 : 0, inv.complete_intersection ? 1 : 0));
  out.push_back(make_check(specs[3].name, specs[3].citation, le, *E0, g_factorial * *deg_closure));
  Check bound = make_check(specs[4].name, specs[4].citation, le, *E1bar,
                           Rational(g - 1) * min_of(*E0 / 2, *E0 - *deg_closure));
  bound.specialized = true;
  out.push_back(std::move(bound));
  Check lech = make_check(specs[5].name, specs[5].citation, le, *E1bar,
                          Rational(g - 1) / 2 * g_factorial * *deg_closure);
  lech.specialized = true;
  out.push_back(std::move(lech));
  return out;
}

Integer chain_bound(const Invariants& inv) {
  if (!inv.m_primary) throw NotPrimary();
  if (!inv.e1bar.present()) throw InvalidArgument("e1bar unavailable: " + inv.e1bar.reason);
  return *inv.e1bar;
}

bool AnalysisReport::any_check_fails() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.evaluated() && !c.holds; });
}

AnalysisReport analyze(const MonomialIdeal& ideal, const AnalysisConfig& config, std::string label) {
  ideal.require_proper();
  const int d = ideal.dimension();
  if (d > config.dimension_cap) throw DimensionCap(d, config.dimension_cap);

  AnalysisReport report{std::move(label), ideal, {}, {}, config, {}, false, false};
  Invariants& inv = report.invariants;

  // Runs one section; errors become report annotations.
  auto attempt = [&](const char* section, const std::function<void()>& body) -> bool {
    try {
      body();
      return true;
    } catch (const NotStabilized& e) {
      report.budget_exhausted = true;
      report.errors.push_back(std::string(section) + ": " + e.what());
    } catch (const InvariantViolation& e) {
      report.internal_error = true;
      report.errors.push_back(std::string(section) + ": " + e.what());
    } catch (const Error& e) {
      report.errors.push_back(std::string(section) + ": " + e.what());
    }
    return false;
  };
  auto failed = [](const char* section) { return std::string("error in ") + section; };

  inv.d = d;
  inv.height = height(ideal);
  inv.analytic_spread = analytic_spread(ideal);
  inv.equimultiple = inv.analytic_spread == inv.height;
  inv.m_primary = is_primary_to_maximal(ideal);
  inv.complete_intersection = is_complete_intersection(ideal);
  inv.regular_bs_cap = regular_bs_cap(ideal.ring());
  inv.equimultiple_bs_cap = inv.equimultiple ? Field<int>::of(inv.height - 1) : Field<int>::absent(kNotEquimultiple);
  inv.generating_degree = Field<std::optional<Exponent>>::of(generating_degree(ideal));

  const NewtonPolyhedron np(ideal, config.dimension_cap);
  const MonomialIdeal closure = integral_closure_power(np, 1);
  inv.integrally_closed = closure == ideal;

  if (inv.m_primary) {
    inv.colength = Field<Integer>::of(colength(ideal));
    inv.closure_colength = Field<Integer>::of(colength(closure));
    if (!attempt("hilbert", [&] {
          const auto fit = hilbert_coefficients(ideal, config.hilbert);
          inv.e0 = Field<Integer>::of(fit.e(0));
          inv.e1 = Field<Integer>::of(fit.e(1));
        })) {
      inv.e0 = inv.e1 = Field<Integer>::absent(failed("hilbert"));
    }
    if (!attempt("normalized hilbert", [&] {
          const auto fit = normalized_coefficients(ideal, config.hilbert);
          inv.e0bar = Field<Integer>::of(fit.e(0));
          inv.e1bar = Field<Integer>::of(fit.e(1));
        })) {
      inv.e0bar = inv.e1bar = Field<Integer>::absent(failed("normalized hilbert"));
    }
    if (!attempt("volume oracle", [&] { inv.volume_e0 = Field<Integer>::of(multiplicity_volume_oracle(ideal)); }))
      inv.volume_e0 = Field<Integer>::absent(failed("volume oracle"));
  } else {
    for (auto* f : {&inv.e0, &inv.e1, &inv.e0bar, &inv.e1bar, &inv.colength, &inv.closure_colength, &inv.volume_e0})
      *f = Field<Integer>::absent(kNotPrimary);
  }

  inv.degree = Field<Integer>::of(degree(ideal));
  inv.closure_degree = Field<Integer>::of(degree(closure));

  if (inv.equimultiple) {
    if (!attempt("E coefficients", [&] {
          const auto E = E_coefficients(ideal, false, config.hilbert);
          inv.E0 = Field<Integer>::of(E.e0);
          inv.E1 = Field<Integer>::of(E.e1);
        })) {
      inv.E0 = inv.E1 = Field<Integer>::absent(failed("E coefficients"));
    }
    if (!attempt("closure E coefficients", [&] {
          const auto E = E_coefficients(ideal, true, config.hilbert);
          inv.E0bar = Field<Integer>::of(E.e0);
          inv.E1bar = Field<Integer>::of(E.e1);
        })) {
      inv.E0bar = inv.E1bar = Field<Integer>::absent(failed("closure E coefficients"));
    }
    const MonomialIdeal reduction = minimalize(np.vertices(), ideal.ring());
    inv.vertex_reduction = Field<MonomialIdeal>::of(reduction);
    inv.degree_reduction = Field<Integer>::of(degree(reduction));
    if (!attempt("reduction E coefficients", [&] {
          inv.E0_reduction = Field<Integer>::of(E_coefficients(reduction, false, config.hilbert).e0);
        })) {
      inv.E0_reduction = Field<Integer>::absent(failed("reduction E coefficients"));
    }
  } else {
    for (auto* f : {&inv.E0, &inv.E1, &inv.E0bar, &inv.E1bar, &inv.E0_reduction, &inv.degree_reduction})
      *f = Field<Integer>::absent(kNotEquimultiple);
    inv.vertex_reduction = Field<MonomialIdeal>::of(minimalize(np.vertices(), ideal.ring()));
  }

  inv.bs_horizon = config.max_power;
  if (!attempt("briancon-skoda", [&] {
        inv.b_emp = Field<int>::of(empirical_bs(ideal, *inv.vertex_reduction, config.max_power).b_emp);
      })) {
    inv.b_emp = Field<int>::absent(failed("briancon-skoda"));
  }

  if (!attempt("normality", [&] {
        inv.normality = Field<NormalityResult>::of(normality_check(ideal, config.normality_horizon));
      })) {
    inv.normality = Field<NormalityResult>::absent(failed("normality"));
  }

  if (!inv.m_primary) {
    inv.chain_bound = Field<Integer>::absent(kNotPrimary);
    inv.s2 = Field<S2Inference>::absent(kNotPrimary);
  } else if (!inv.e1.present() || !inv.e1bar.present() || !inv.normality.present()) {
    inv.chain_bound = inv.e1bar.present() ? Field<Integer>::of(*inv.e1bar) : Field<Integer>::absent(inv.e1bar.reason);
    inv.s2 = Field<S2Inference>::absent("inputs unavailable");
  } else {
    inv.chain_bound = Field<Integer>::of(chain_bound(inv));
    if (!attempt("s2 inference", [&] {
          inv.s2 = Field<S2Inference>::of(s2_inference((*inv.normality).normal, *inv.e1, *inv.e1bar));
        })) {
      inv.s2 = Field<S2Inference>::absent(failed("s2 inference"));
    }
  }

  // Fixed order, independent of evaluation order.
  auto& checks = report.checks;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  append(monotonicity_checks(inv));

  if (inv.b_emp.present())
    checks.push_back(make_check("bs_regular_cap", cite::kClassicalBs, Relation::LessEqual, *inv.b_emp, inv.regular_bs_cap));
  else
    checks.push_back(skipped_check("bs_regular_cap", cite::kClassicalBs, Relation::LessEqual, inv.b_emp.reason));

  {
    const char* name = "normal_implies_e1bar_eq_e1";
    Inputs in;
    std::optional<Rational> e1, e1bar;
    if (inv.m_primary) {
      e1 = in(inv.e1, "e1");
      e1bar = in(inv.e1bar, "e1bar");
    }
    if (!inv.m_primary)
      checks.push_back(skipped_check(name, cite::kNormalityCriterion, Relation::Equal, kNotPrimary));
    else if (!inv.normality.present())
      checks.push_back(skipped_check(name, cite::kNormalityCriterion, Relation::Equal, inv.normality.reason));
    else if (!(*inv.normality).normal)
      checks.push_back(skipped_check(name, cite::kNormalityCriterion, Relation::Equal, "ideal is not normal"));
    else if (!in.ok())
      checks.push_back(skipped_check(name, cite::kNormalityCriterion, Relation::Equal, in.reason()));
    else
      checks.push_back(make_check(name, cite::kNormalityCriterion, Relation::Equal, *e1bar, *e1));
  }

  {
    const char* name = "bs_equimultiple_cap";
    if (!inv.equimultiple)
      checks.push_back(skipped_check(name, cite::kJacobianBs, Relation::LessEqual, kNotEquimultiple));
    else if (!inv.b_emp.present())
      checks.push_back(skipped_check(name, cite::kJacobianBs, Relation::LessEqual, inv.b_emp.reason));
    else
      checks.push_back(
          make_check(name, cite::kJacobianBs, Relation::LessEqual, *inv.b_emp, *inv.equimultiple_bs_cap));
  }

  checks.push_back(regular_bound_check(inv));
  append(sharpness_checks(inv));
  append(equimultiple_checks(inv));

  {
    const char* name = "e0_volume_oracle";
    Inputs in;
    std::optional<Rational> e0, vol;
    if (inv.m_primary) {
      e0 = in(inv.e0, "e0");
      vol = in(inv.volume_e0, "volume");
    }
    if (!inv.m_primary)
      checks.push_back(skipped_check(name, cite::kVolume, Relation::Equal, kNotPrimary));
    else if (!in.ok())
      checks.push_back(skipped_check(name, cite::kVolume, Relation::Equal, in.reason()));
    else
      checks.push_back(make_check(name, cite::kVolume, Relation::Equal, *e0, *vol));
  }
  return report;
}

}  // namespace normbound
