#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

bool divides(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Point> points(const MonomialIdeal& ideal) {
  std::vector<Point> out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.coords().begin(), g.coords().end());
  return out;
}

bool member(const std::vector<Point>& gens, const Point& v) {
  return std::any_of(gens.begin(), gens.end(), [&](const Point& g) { return divides(g, v); });
}

std::vector<Point> minimal(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      dominated = j != i && divides(pts[j], pts[i]);
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

std::vector<Point> power_by_sums(const std::vector<Point>& gens, int n) {
  std::set<Point> sums;
  const std::size_t d = gens.front().size();
  std::function<void(std::size_t, int, Point)> rec = [&](std::size_t from, int left, Point acc) {
    if (left == 0) {
      sums.insert(acc);
      return;
    }
    for (std::size_t j = from; j < gens.size(); ++j) {
      Point next = acc;
      for (std::size_t i = 0; i < d; ++i) next[i] += gens[j][i];
      rec(j, left - 1, next);
    }
  };
  rec(0, n, Point(d, 0));
  return minimal({sums.begin(), sums.end()});
}

Integer colength(const std::vector<Point>& gens) {
  const std::size_t d = gens.front().size();
  Point bound(d, -1);
  for (const auto& g : gens) {
    int nonzero = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (g[i] != 0) ++nonzero, at = i;
    if (nonzero == 1 && (bound[at] < 0 || g[at] < bound[at])) bound[at] = g[at];
  }
  for (auto b : bound)
    if (b < 0) throw std::invalid_argument("not m-primary");
  Integer count = 0;
  Point v(d, 0);
  while (true) {
    if (!member(gens, v)) ++count;
    std::size_t i = 0;
    while (i < d && ++v[i] == bound[i]) v[i++] = 0;
    if (i == d) break;
  }
  return count;
}

bool lp_member(const std::vector<Point>& gens, const Point& v, int n) {
  // Variables: mu_j (generators), s_i (slacks), a_r (artificials).
  // Rows: sum_j mu_j g_ij + s_i = v_i (i < d), sum_j mu_j = n.
  const std::size_t d = v.size(), k = gens.size(), m = d + 1;
  const std::size_t cols = k + d + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i][j] = gens[j][i];
    t[i][k + i] = 1;
    t[i][cols] = v[i];
  }
  for (std::size_t j = 0; j < k; ++j) t[d][j] = 1;
  t[d][cols] = n;
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    t[r][k + d + r] = 1;
    basis[r] = k + d + r;
  }
  auto is_artificial = [&](std::size_t j) { return j >= k + d; };

  while (true) {
    // reduced cost of column j under the phase-one objective sum(a)
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols && !entering; ++j) {
      if (is_artificial(j)) continue;
      Rational reduced = 0;
      for (std::size_t r = 0; r < m; ++r)
        if (is_artificial(basis[r])) reduced -= t[r][j];
      if (reduced < 0) entering = j;
    }
    if (!entering) break;
    const std::size_t j = *entering;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][j] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][j];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction cannot occur in phase one
    const std::size_t p = *leave;
    const Rational pivot = t[p][j];
    for (auto& x : t[p]) x /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == p || t[r][j] == 0) continue;
      const Rational f = t[r][j];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[p][c];
    }
    basis[p] = j;
  }
  Rational infeasibility = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (is_artificial(basis[r])) infeasibility += t[r][cols];
  return infeasibility == 0;
}

std::vector<Point> closure_generators(const std::vector<Point>& gens, int n) {
  const std::size_t d = gens.front().size();
  Exponent top = 0;
  for (const auto& g : gens)
    for (auto e : g) top = std::max(top, e);
  top *= n;
  std::vector<Point> inside;
  Point v(d, 0);
  while (true) {
    if (lp_member(gens, v, n)) inside.push_back(v);
    std::size_t i = 0;
    while (i < d && ++v[i] > top) v[i++] = 0;
    if (i == d) break;
  }
  return minimal(inside);
}

Integer shoelace_e0(const std::vector<Point>& gens) {
  auto pts = gens;
  std::sort(pts.begin(), pts.end());
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // polygon: origin, then the hull from the x-axis point back to the y-axis point
  std::vector<Point> poly{{0, 0}};
  for (auto it = hull.rbegin(); it != hull.rend(); ++it) poly.push_back(*it);
  Integer twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += Integer(a[0]) * b[1] - Integer(b[0]) * a[1];
  }
  return twice < 0 ? Integer(-twice) : twice;
}

std::pair<Rational, Rational> interpolated_e0_e1(const std::vector<Integer>& values, int first, int degree) {
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    const Integer n = first + static_cast<int>(r);
    Rational p = 1;
    for (std::size_t c = 0; c < m; ++c, p *= Rational(n)) a[r][c] = p;
    a[r][m] = Rational(values.at(static_cast<std::size_t>(first - 1) + r));
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> coef(m);
  for (std::size_t i = 0; i < m; ++i) coef[i] = a[i][m] / a[i][i];

  Rational fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= i;
  const Rational e0 = fact * coef[static_cast<std::size_t>(degree)];
  const Rational lower = degree >= 1 ? coef[static_cast<std::size_t>(degree - 1)] : Rational(0);
  const Rational e1 = (e0 * degree * (degree - 1) / (2 * fact) - lower) * (fact / std::max(degree, 1));
  return {e0, e1};
}

std::vector<Point> staircase(const std::vector<Exponent>& a) {
  std::vector<Point> out;
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back({a[j], static_cast<Exponent>(j)});
  return out;
}

std::vector<MonomialIdeal> all_two_variable(int box) {
  // Non-increasing column heights h(0..box-1) with values in 0..box, h(0) >= 1.
  std::vector<MonomialIdeal> out;
  const auto ring = normbound::RingDescriptor::standard(2);
  std::vector<Exponent> h(static_cast<std::size_t>(box), 0);
  std::function<void(int, Exponent)> rec = [&](int x, Exponent cap) {
    if (x == box) {
      if (h[0] == 0) return;
      std::vector<ExponentVector> gens;
      for (int c = 0; c < box; ++c)
        if (c == 0 || h[static_cast<std::size_t>(c)] < h[static_cast<std::size_t>(c - 1)])
          gens.push_back(ExponentVector{c, h[static_cast<std::size_t>(c)]});
      if (h.back() > 0) gens.push_back(ExponentVector{box, 0});
      out.push_back(normbound::minimalize(gens, ring));
      return;
    }
    for (Exponent v = 0; v <= cap; ++v) {
      h[static_cast<std::size_t>(x)] = v;
      rec(x + 1, v);
    }
  };
  rec(0, box);
  return out;
}

MonomialIdeal random_three_variable(std::mt19937& rng, int box) {
  std::uniform_int_distribution<Exponent> pure(1, box), any(0, box), extra(0, 4);
  std::vector<ExponentVector> gens{{pure(rng), 0, 0}, {0, pure(rng), 0}, {0, 0, pure(rng)}};
  for (Exponent k = extra(rng); k > 0; --k) {
    ExponentVector v{any(rng), any(rng), any(rng)};
    if (!v.is_zero()) gens.push_back(v);
  }
  return normbound::minimalize(gens, normbound::RingDescriptor::standard(3));
}

}  // namespace oracle
