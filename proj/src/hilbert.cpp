#include "normbound/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace normbound {

FiltrationProvider::FiltrationProvider(const MonomialIdeal& ideal, FiltrationKind kind, DegreeMode mode)
    : ideal_(ideal), kind_(kind), mode_(mode) {
  ideal_.require_proper();
  if (mode_ == DegreeMode::Length && !is_primary_to_maximal(ideal_)) throw NotPrimary();
  if (mode_ == DegreeMode::Degree) primes_ = top_primes(ideal_);
  if (kind_ == FiltrationKind::ClosurePowers) polyhedron_.emplace(ideal_);
}

int FiltrationProvider::polynomial_degree() const {
  return mode_ == DegreeMode::Length ? ideal_.dimension() : height(ideal_);
}

std::string FiltrationProvider::describe() const {
  std::ostringstream os;
  os << (kind_ == FiltrationKind::Powers ? "powers" : "closure-powers") << " of " << ideal_ << ", "
     << (mode_ == DegreeMode::Length ? "length" : "degree") << " mode";
  return os.str();
}

std::vector<Integer> FiltrationProvider::values(int first, int last) const {
  std::vector<Integer> out;
  if (first < 1) throw InvalidArgument("samples start at n = 1");
  auto measure = [&](const MonomialIdeal& dn) -> Integer {
    if (mode_ == DegreeMode::Length) return colength(dn);
    Integer total = 0;
    for (const auto& p : primes_) total += colength(localize(dn, p));
    return total;
  };
  if (kind_ == FiltrationKind::Powers) {
    MonomialIdeal current = power(ideal_, first);
    for (int n = first; n <= last; ++n) {
      if (n > first) current = product(current, ideal_);
      out.push_back(measure(current));
    }
    return out;
  }
  for (int n = first; n <= last; ++n) {
    if (mode_ == DegreeMode::Length)
      out.push_back(closure_colength(*polyhedron_, n));
    else
      out.push_back(measure(integral_closure_power(*polyhedron_, n)));
  }
  return out;
}

HilbertTable sample(const FiltrationProvider& provider, int count) {
  if (count < 1) throw InvalidArgument("sample count must be positive");
  HilbertTable table{provider.describe(), provider.values(1, count)};
  for (int n = 2; n <= count; ++n)
    if (table.at(n) < table.at(n - 1))
      throw InvariantViolation("Hilbert function decreased at n = " + std::to_string(n) + " for " + table.provider);
  return table;
}

namespace {

Integer basis_value(std::int64_t n, int degree, int i) { return binomial(n + degree - 1 - i, degree - i); }

}  // namespace

Integer FittedPolynomial::evaluate(std::int64_t n) const {
  Integer h = 0;
  for (int i = 0; i <= degree; ++i) {
    const Integer term = e(i) * basis_value(n, degree, i);
    h += (i % 2 == 0) ? term : Integer(-term);
  }
  return h;
}

FittedPolynomial fit(const HilbertTable& table, int degree, int window) {
  const int count = table.size();
  if (degree < 0) throw InvalidArgument("negative degree");
  if (count < degree + 1)
    throw NotStabilized(count, "need at least " + std::to_string(degree + 1) + " samples");

  // degree-th forward differences; diffs[k] starts at sample n = k + 1
  std::vector<Integer> diffs(table.values);
  for (int step = 0; step < degree; ++step) {
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) diffs[k] = diffs[k + 1] - diffs[k];
    diffs.pop_back();
  }
  std::size_t start = diffs.size() - 1;
  while (start > 0 && diffs[start - 1] == diffs.back()) --start;
  const int n0 = static_cast<int>(start) + 1;
  const int confirmed = static_cast<int>(diffs.size() - start);
  if (confirmed < window)
    throw NotStabilized(count, std::to_string(confirmed) + " constant differences from n0 = " + std::to_string(n0) +
                                   ", window needs " + std::to_string(window));

  RationalMatrix a;
  std::vector<Rational> b;
  for (int r = 0; r <= degree; ++r) {
    const int n = n0 + r;
    std::vector<Rational> row;
    for (int i = 0; i <= degree; ++i) {
      const Integer v = basis_value(n, degree, i);
      row.emplace_back(i % 2 == 0 ? v : Integer(-v));
    }
    a.push_back(std::move(row));
    b.emplace_back(table.at(n));
  }
  const auto solution = solve(std::move(a), std::move(b));

  FittedPolynomial poly;
  poly.degree = degree;
  poly.stabilization_index = n0;
  poly.window = confirmed;
  poly.samples = count;
  for (const auto& q : solution) {
    if (!is_integral(q)) throw NotStabilized(count, "non-integral coefficient " + to_string(q));
    poly.coefficients.push_back(boost::multiprecision::numerator(q));
  }
  for (int n = n0; n <= count; ++n)
    if (poly.evaluate(n) != table.at(n))
      throw InvariantViolation("fitted polynomial misses sample n = " + std::to_string(n));
  return poly;
}

FittedPolynomial fit_filtration(const FiltrationProvider& provider, const HilbertConfig& config) {
  const int degree = provider.polynomial_degree();
  const int window = config.window.value_or(degree + 2) + config.validation_samples;
  if (config.fit_budget < 1) throw InvalidArgument("fit budget must be positive");
  int target = 2 * (degree + 3);
  HilbertTable table{provider.describe(), {}};
  while (true) {
    const int count = std::min(target, config.fit_budget);
    if (count > table.size()) {
      auto more = provider.values(table.size() + 1, count);
      table.values.insert(table.values.end(), more.begin(), more.end());
    }
    try {
      return fit(table, degree, window);
    } catch (const NotStabilized& e) {
      if (count >= config.fit_budget)
        throw NotStabilized(config.fit_budget, provider.describe() + ": " + e.what());
    }
    target *= 2;
  }
}

namespace {

FittedPolynomial checked_primary_fit(const MonomialIdeal& ideal, FiltrationKind kind, const HilbertConfig& config) {
  FittedPolynomial poly = fit_filtration(FiltrationProvider(ideal, kind, DegreeMode::Length), config);
  if (poly.e(0) < 1) throw InvariantViolation("multiplicity below 1");
  return poly;
}

}  // namespace

FittedPolynomial hilbert_coefficients(const MonomialIdeal& ideal, const HilbertConfig& config) {
  return checked_primary_fit(ideal, FiltrationKind::Powers, config);
}

FittedPolynomial normalized_coefficients(const MonomialIdeal& ideal, const HilbertConfig& config) {
  return checked_primary_fit(ideal, FiltrationKind::ClosurePowers, config);
}

ECoefficients E_coefficients(const MonomialIdeal& ideal, bool closure, const HilbertConfig& config) {
  const auto kind = closure ? FiltrationKind::ClosurePowers : FiltrationKind::Powers;
  ECoefficients out;
  out.direct = fit_filtration(FiltrationProvider(ideal, kind, DegreeMode::Degree), config);

  std::vector<Integer> summed(out.direct.coefficients.size(), 0);
  for (const auto& p : top_primes(ideal)) {
    const MonomialIdeal local = localize(ideal, p);
    FittedPolynomial poly = fit_filtration(FiltrationProvider(local, kind, DegreeMode::Length), config);
    for (std::size_t i = 0; i < summed.size(); ++i) summed[i] += poly.coefficients.at(i);
    out.local.emplace_back(p, std::move(poly));
  }
  if (summed != out.direct.coefficients)
    throw InvariantViolation("degree-mode fit disagrees with the sum of local fits for " +
                             out.direct.coefficients.front().str() + " vs " + summed.front().str());
  out.e0 = out.direct.e(0);
  out.e1 = out.direct.degree >= 1 ? out.direct.e(1) : Integer(0);
  return out;
}

}  // namespace normbound
