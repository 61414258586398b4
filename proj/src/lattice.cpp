#include "normbound/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "grid.hpp"

namespace normbound {

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor RingDescriptor::make(std::vector<std::string> names) {
  if (names.empty()) throw InvalidArgument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidArgument("variable names must be nonempty");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
  if (names.size() > 31) throw InvalidArgument("at most 31 variables are supported");
  RingDescriptor r;
  r.variables = std::move(names);
  return r;
}

RingDescriptor RingDescriptor::standard(int d) {
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back(d <= 4 ? kShort[i] : "x" + std::to_string(i + 1));
  return make(std::move(names));
}

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {
  for (auto c : coords_)
    if (c < 0) throw InvalidArgument("exponent entries must be non-negative");
}

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords)
    : ExponentVector(std::vector<Exponent>(coords)) {}

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Exponent c) { return c == 0; });
}

Exponent ExponentVector::total_degree() const {
  Exponent s = 0;
  for (auto c : coords_) s = checked_add(s, c);
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

std::vector<int> ExponentVector::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  std::vector<Exponent> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coords_[i], other.coords_[i]);
  ExponentVector r;
  r.coords_ = std::move(c);
  return r;
}

ExponentVector ExponentVector::scaled(Exponent k) const {
  std::vector<Exponent> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(coords_[i], k);
  return ExponentVector(std::move(c));
}

ExponentVector ExponentVector::restricted(std::span<const int> indices) const {
  std::vector<Exponent> c;
  c.reserve(indices.size());
  for (int i : indices) c.push_back(coords_[static_cast<std::size_t>(i)]);
  ExponentVector r;
  r.coords_ = std::move(c);
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

// ---------------------------------------------------------------------------
// MonomialIdeal

void MonomialIdeal::require_proper() const {
  if (is_unit()) throw UnitIdeal();
}

MonomialIdeal MonomialIdeal::unit(const RingDescriptor& ring) {
  return MonomialIdeal(ring, {ExponentVector::zero(static_cast<std::size_t>(ring.dimension()))});
}

std::string monomial_string(const ExponentVector& v, const RingDescriptor& ring) {
  if (v.is_zero()) return "1";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables.at(i);
    if (v[i] > 1) out += '^' + std::to_string(v[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << '(';
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ", ";
    first = false;
    os << monomial_string(g, ideal.ring());
  }
  return os << ')';
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens, const RingDescriptor& ring) {
  if (gens.empty()) throw EmptyGenerators();
  const auto d = static_cast<std::size_t>(ring.dimension());
  for (const auto& g : gens)
    if (g.size() != d)
      throw DimensionMismatch("exponent vector of length " + std::to_string(g.size()) +
                              " in a ring of dimension " + std::to_string(d));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A proper divisor is lexicographically smaller, so scanning in lex order
  // only needs to compare against already-kept generators.
  std::vector<ExponentVector> kept;
  for (auto& v : gens) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& g) { return g.divides(v); });
    if (!dominated) kept.push_back(std::move(v));
  }
  return MonomialIdeal(ring, std::move(kept));
}

MonomialIdeal make_ideal(std::initializer_list<std::initializer_list<Exponent>> gens) {
  std::vector<ExponentVector> v;
  for (auto g : gens) v.emplace_back(g);
  if (v.empty()) throw EmptyGenerators();
  return minimalize(std::move(v), RingDescriptor::standard(static_cast<int>(v.front().size())));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("product of ideals in different rings");
  std::vector<ExponentVector> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) sums.push_back(g + h);
  return minimalize(std::move(sums), a.ring());
}

MonomialIdeal power(const MonomialIdeal& ideal, int n) {
  if (n < 0) throw InvalidArgument("negative power");
  if (n == 0) return MonomialIdeal::unit(ideal.ring());
  MonomialIdeal result = ideal;
  for (int k = 1; k < n; ++k) result = product(result, ideal);
  return result;
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& v) {
  if (v.size() != static_cast<std::size_t>(ideal.dimension()))
    throw DimensionMismatch("membership query of the wrong length");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& g) { return g.divides(v); });
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const ExponentVector& g) { return contains(b, g); });
}

std::optional<Exponent> pure_power(const MonomialIdeal& ideal, int variable) {
  std::optional<Exponent> best;
  for (const auto& g : ideal.generators()) {
    const auto s = g.support();
    if (s.empty()) return 0;
    if (s.size() == 1 && s.front() == variable) best = best ? std::min(*best, g[variable]) : g[variable];
  }
  return best;
}

bool is_primary_to_maximal(const MonomialIdeal& ideal) {
  for (int i = 0; i < ideal.dimension(); ++i)
    if (!pure_power(ideal, i)) return false;
  return true;
}

Integer colength(const MonomialIdeal& ideal) {
  const int d = ideal.dimension();
  std::vector<Exponent> edges;
  for (int i = 0; i < d; ++i) {
    auto k = pure_power(ideal, i);
    if (!k) throw NotPrimary();
    edges.push_back(*k);
  }
  if (ideal.is_unit()) return 0;
  const Exponent last = edges.back();
  edges.pop_back();
  detail::Grid grid(edges);
  if (grid.size() == 0) return 0;
  // cell value: smallest last exponent of an ideal element over this prefix
  std::vector<Exponent> column(grid.size(), last);
  for (const auto& g : ideal.generators()) {
    const auto c = g.coords();
    if (!grid.inside(c.data())) continue;
    auto& t = column[grid.index(c.data())];
    t = std::min(t, c.back());
  }
  std::vector<Exponent> cell(grid.rank(), 0);
  Exponent total = 0;
  std::size_t idx = 0;
  do {
    auto& t = column[idx];
    for (std::size_t i = 0; i < grid.rank(); ++i)
      if (cell[i] > 0) t = std::min(t, column[idx - grid.stride(i)]);
    total = checked_add(total, t);
    ++idx;
  } while (grid.next(cell));
  return total;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> support_masks(const MonomialIdeal& ideal) {
  ideal.require_proper();
  std::vector<Mask> masks;
  for (const auto& g : ideal.generators()) {
    Mask m = 0;
    for (int i : g.support()) m |= Mask{1} << i;
    masks.push_back(m);
  }
  return masks;
}

bool is_transversal(Mask s, const std::vector<Mask>& edges) {
  return std::all_of(edges.begin(), edges.end(), [s](Mask e) { return (e & s) != 0; });
}

CoordinatePrime prime_of(Mask s) {
  CoordinatePrime p;
  for (int i = 0; i < 32; ++i)
    if (s & (Mask{1} << i)) p.variables.push_back(i);
  return p;
}

}  // namespace

int height(const MonomialIdeal& ideal) {
  const auto edges = support_masks(ideal);
  const int d = ideal.dimension();
  int best = d;
  for (Mask s = 1; s < (Mask{1} << d); ++s)
    if (is_transversal(s, edges)) best = std::min(best, std::popcount(s));
  return best;
}

std::vector<CoordinatePrime> minimal_primes(const MonomialIdeal& ideal) {
  const auto edges = support_masks(ideal);
  const int d = ideal.dimension();
  std::vector<CoordinatePrime> primes;
  for (Mask s = 1; s < (Mask{1} << d); ++s) {
    if (!is_transversal(s, edges)) continue;
    bool minimal = true;
    for (Mask rest = s; rest && minimal; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      if (is_transversal(s & ~bit, edges)) minimal = false;
    }
    if (minimal) primes.push_back(prime_of(s));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<CoordinatePrime> top_primes(const MonomialIdeal& ideal) {
  auto primes = minimal_primes(ideal);
  const int g = height(ideal);
  std::erase_if(primes, [g](const CoordinatePrime& p) { return p.height() != g; });
  return primes;
}

MonomialIdeal localize(const MonomialIdeal& ideal, const CoordinatePrime& p) {
  std::vector<std::string> names;
  for (int i : p.variables) names.push_back(ideal.ring().variables.at(static_cast<std::size_t>(i)));
  const auto ring = RingDescriptor::make(std::move(names));
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.restricted(p.variables));
  return minimalize(std::move(gens), ring);
}

Integer degree(const MonomialIdeal& ideal) {
  Integer total = 0;
  for (const auto& p : top_primes(ideal)) total += colength(localize(ideal, p));
  return total;
}

bool is_equimultiple(const MonomialIdeal& ideal) { return analytic_spread(ideal) == height(ideal); }

bool is_complete_intersection(const MonomialIdeal& ideal) {
  const auto masks = support_masks(ideal);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (masks[i] & masks[j]) return false;
  return true;
}

std::optional<Exponent> generating_degree(const MonomialIdeal& ideal) {
  const Exponent s = ideal.generators().front().total_degree();
  for (const auto& g : ideal.generators())
    if (g.total_degree() != s) return std::nullopt;
  return s;
}

}  // namespace normbound
