#include "normbound/newton.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "grid.hpp"

namespace normbound {

namespace {

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Exponent dot(std::span<const Exponent> w, std::span<const Exponent> v) {
  Exponent s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s = checked_add(s, checked_mul(w[i], v[i]));
  return s;
}

std::vector<Exponent> max_exponents(const MonomialIdeal& ideal) {
  std::vector<Exponent> m(static_cast<std::size_t>(ideal.dimension()), 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], g[i]);
  return m;
}

// Hyperplanes through d affinely independent elements of {points} ∪ {rays
// e_i} with at least one point; a valid one is a facet.
std::vector<Facet> enumerate_facets(const std::vector<ExponentVector>& points, int d) {
  std::set<Facet> found;
  const int m = static_cast<int>(points.size());
  for (int j = 1; j <= std::min(d, m); ++j) {
    for_each_combination(m, j, [&](const std::vector<int>& chosen) {
      const auto& base = points[static_cast<std::size_t>(chosen.front())];
      for_each_combination(d, d - j, [&](const std::vector<int>& rays) {
        RationalMatrix rows;
        for (std::size_t k = 1; k < chosen.size(); ++k) {
          const auto& p = points[static_cast<std::size_t>(chosen[k])];
          std::vector<Rational> row;
          for (int i = 0; i < d; ++i) row.emplace_back(p[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(i)]);
          rows.push_back(std::move(row));
        }
        for (int r : rays) {
          std::vector<Rational> row(static_cast<std::size_t>(d), Rational(0));
          row[static_cast<std::size_t>(r)] = 1;
          rows.push_back(std::move(row));
        }
        const auto ns = null_space(std::move(rows), static_cast<std::size_t>(d));
        if (ns.size() != 1) return;
        auto w = primitive_integer(ns.front());
        const bool nonneg = std::all_of(w.begin(), w.end(), [](const Integer& z) { return z >= 0; });
        const bool nonpos = std::all_of(w.begin(), w.end(), [](const Integer& z) { return z <= 0; });
        if (!nonneg && !nonpos) return;
        Facet f;
        for (auto& z : w) f.normal.push_back(to_exponent(nonneg ? z : Integer(-z)));
        f.offset = dot(f.normal, base.coords());
        if (f.offset == 0) return;
        for (const auto& p : points)
          if (dot(f.normal, p.coords()) < f.offset) return;
        found.insert(std::move(f));
      });
    });
  }
  return {found.begin(), found.end()};
}

}  // namespace

Exponent Facet::slack(const ExponentVector& v, Exponent level) const {
  return checked_add(dot(normal, v.coords()), -checked_mul(level, offset));
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal, int dimension_cap) : ideal_(ideal) {
  ideal_.require_proper();
  const int d = ideal_.dimension();
  if (d > dimension_cap) throw DimensionCap(d, dimension_cap);
  facets_ = enumerate_facets(ideal_.generators(), d);
  for (const auto& g : ideal_.generators()) {
    RationalMatrix tight;
    for (const auto& f : facets_) {
      if (f.slack(g, 1) != 0) continue;
      std::vector<Rational> row;
      for (auto c : f.normal) row.emplace_back(c);
      tight.push_back(std::move(row));
    }
    for (int i = 0; i < d; ++i) {
      if (g[static_cast<std::size_t>(i)] != 0) continue;
      std::vector<Rational> row(static_cast<std::size_t>(d), Rational(0));
      row[static_cast<std::size_t>(i)] = 1;
      tight.push_back(std::move(row));
    }
    if (rank(std::move(tight)) == d) vertices_.push_back(g);
  }
}

bool NewtonPolyhedron::contains(const ExponentVector& v, Exponent level) const {
  if (v.size() != static_cast<std::size_t>(dimension()))
    throw DimensionMismatch("membership query of the wrong length");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.slack(v, level) >= 0; });
}

namespace {

// Smallest last exponent t such that (prefix, t) ∈ level·NP, or kInfinite.
Exponent column_threshold(const std::vector<Facet>& facets, const std::vector<Exponent>& prefix, Exponent level) {
  Exponent t = 0;
  const std::size_t last = prefix.size();
  for (const auto& f : facets) {
    Exponent s = -checked_mul(level, f.offset);
    for (std::size_t i = 0; i < last; ++i) s = checked_add(s, checked_mul(f.normal[i], prefix[i]));
    if (s >= 0) continue;
    if (f.normal[last] == 0) return detail::kInfinite;
    t = std::max(t, ceil_div(-s, f.normal[last]));
  }
  return t;
}

}  // namespace

MonomialIdeal integral_closure_power(const NewtonPolyhedron& np, int n) {
  if (n < 0) throw InvalidArgument("negative power");
  const auto& ring = np.ideal().ring();
  if (n == 0) return MonomialIdeal::unit(ring);
  // Minimal generators of closure(I^n) lie in the box [0, n·max_i].
  auto extents = max_exponents(np.ideal());
  extents.pop_back();
  for (auto& e : extents) e = checked_add(checked_mul(e, n), 1);
  detail::Grid grid(extents);

  std::vector<Exponent> column(grid.size());
  std::vector<Exponent> cell(grid.rank(), 0);
  std::vector<ExponentVector> gens;
  std::size_t idx = 0;
  do {
    const Exponent t = column_threshold(np.facets(), cell, n);
    column[idx] = t;
    bool minimal = t != detail::kInfinite;
    for (std::size_t i = 0; i < grid.rank() && minimal; ++i)
      if (cell[i] > 0 && column[idx - grid.stride(i)] <= t) minimal = false;
    if (minimal) {
      std::vector<Exponent> v(cell);
      v.push_back(t);
      gens.emplace_back(std::move(v));
    }
    ++idx;
  } while (grid.next(cell));
  return minimalize(std::move(gens), ring);
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, int n) {
  if (n == 0) return MonomialIdeal::unit(ideal.ring());
  return integral_closure_power(NewtonPolyhedron(ideal), n);
}

Integer closure_colength(const NewtonPolyhedron& np, int n) {
  const auto& ideal = np.ideal();
  if (!is_primary_to_maximal(ideal)) throw NotPrimary();
  if (n <= 0) return 0;
  std::vector<Exponent> extents;
  for (int i = 0; i + 1 < ideal.dimension(); ++i) extents.push_back(checked_mul(*pure_power(ideal, i), n));
  detail::Grid grid(extents);
  if (grid.size() == 0) return 0;
  std::vector<Exponent> cell(grid.rank(), 0);
  Exponent total = 0;
  do {
    const Exponent t = column_threshold(np.facets(), cell, n);
    if (t == detail::kInfinite) throw InvariantViolation("unbounded column in an m-primary closure");
    total = checked_add(total, t);
  } while (grid.next(cell));
  return total;
}

int analytic_spread(const MonomialIdeal& ideal) {
  ideal.require_proper();
  const auto d = static_cast<std::size_t>(ideal.dimension());
  const NewtonPolyhedron np(ideal, std::max(ideal.dimension(), kDefaultDimensionCap));
  const auto& vertices = np.vertices();

  // Valid inequalities: the facets and the coordinate half-spaces.
  std::vector<Facet> inequalities = np.facets();
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Exponent> e(d, 0);
    e[i] = 1;
    inequalities.push_back(Facet{std::move(e), 0});
  }
  using VertexSet = std::vector<std::size_t>;
  auto tight = [&](const Facet& f) {
    VertexSet out;
    for (std::size_t k = 0; k < vertices.size(); ++k)
      if (f.slack(vertices[k], 1) == 0) out.push_back(k);
    return out;
  };

  // Vertex sets of faces, closed under intersection.
  std::vector<VertexSet> base;
  for (const auto& f : inequalities)
    if (auto t = tight(f); !t.empty()) base.push_back(std::move(t));
  std::set<VertexSet> faces(base.begin(), base.end());
  for (std::size_t k = 0; k < vertices.size(); ++k) faces.insert({k});
  std::vector<VertexSet> frontier(faces.begin(), faces.end());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (const auto& a : frontier)
      for (const auto& b : base) {
        VertexSet both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty() && faces.insert(both).second) next.push_back(std::move(both));
      }
    frontier = std::move(next);
  }

  // A face is bounded iff the normals of the inequalities tight on it cover
  // every coordinate.
  int best = 1;
  for (const auto& face : faces) {
    std::vector<bool> covered(d, false);
    for (const auto& f : inequalities) {
      const bool on_face = std::all_of(face.begin(), face.end(),
                                       [&](std::size_t k) { return f.slack(vertices[k], 1) == 0; });
      if (!on_face) continue;
      for (std::size_t i = 0; i < d; ++i) covered[i] = covered[i] || f.normal[i] != 0;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) continue;
    RationalMatrix rows;
    for (auto k : face) {
      std::vector<Rational> row(vertices[k].coords().begin(), vertices[k].coords().end());
      row.emplace_back(1);
      rows.push_back(std::move(row));
    }
    best = std::max(best, rank(std::move(rows)));
  }
  return best;
}

MonomialIdeal vertex_reduction(const MonomialIdeal& ideal) {
  NewtonPolyhedron np(ideal);
  return minimalize(np.vertices(), ideal.ring());
}

Integer multiplicity_volume_oracle(const MonomialIdeal& ideal) {
  if (!is_primary_to_maximal(ideal)) throw NotPrimary();
  ideal.require_proper();
  NewtonPolyhedron np(ideal);
  const int d = ideal.dimension();
  // NP ∩ box, as A x <= b; the complement of NP in the orthant lies in the box.
  RationalMatrix a;
  std::vector<Rational> b;
  Rational box_volume = 1;
  for (int i = 0; i < d; ++i) {
    const Exponent k = *pure_power(ideal, i);
    box_volume *= k;
    std::vector<Rational> upper(static_cast<std::size_t>(d), Rational(0)), lower(upper);
    upper[static_cast<std::size_t>(i)] = 1;
    lower[static_cast<std::size_t>(i)] = -1;
    a.push_back(std::move(upper));
    b.emplace_back(k);
    a.push_back(std::move(lower));
    b.emplace_back(0);
  }
  for (const auto& f : np.facets()) {
    std::vector<Rational> row;
    for (auto c : f.normal) row.emplace_back(-c);
    a.push_back(std::move(row));
    b.emplace_back(-f.offset);
  }
  const Rational complement = box_volume - detail::polytope_volume(a, b);
  const Rational scaled = complement * Rational(factorial(d));
  if (!is_integral(scaled)) throw InvariantViolation("non-integral normalized volume " + to_string(scaled));
  return boost::multiprecision::numerator(scaled);
}

RootTestResult closure_member_root_oracle(const MonomialIdeal& ideal, const ExponentVector& v, int max_k) {
  if (max_k < 1) return {};
  MonomialIdeal p = ideal;
  for (int k = 1; k <= max_k; ++k) {
    if (k > 1) p = product(p, ideal);
    if (contains(p, v.scaled(k))) return {true, k};
  }
  return {};
}

const MonomialIdeal& ClosureFiltration::at(int n) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  }
  MonomialIdeal computed = integral_closure_power(polyhedron_, n);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(n, std::move(computed)).first->second;
}

}  // namespace normbound
