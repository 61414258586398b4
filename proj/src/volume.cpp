#include <algorithm>
#include <map>
#include <optional>

#include "normbound/newton.hpp"

namespace normbound::detail {

namespace {

using Row = std::vector<Rational>;

// Scales each row so its first nonzero coefficient has absolute value 1 and
// keeps the tightest right-hand side per direction. Returns false when some
// row reads 0 <= negative (empty set).
bool normalize(const RationalMatrix& a, const std::vector<Rational>& b, std::map<Row, Rational>& out) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    const Row& row = a[r];
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) {
      if (b[r] < 0) return false;
      continue;
    }
    const Rational scale = abs(row[lead]);
    Row scaled(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) scaled[c] = row[c] / scale;
    const Rational rhs = b[r] / scale;
    auto [it, inserted] = out.try_emplace(std::move(scaled), rhs);
    if (!inserted && rhs < it->second) it->second = rhs;
  }
  return true;
}

Rational volume(const RationalMatrix& a_in, const std::vector<Rational>& b_in, std::size_t dim) {
  std::map<Row, Rational> rows;
  if (!normalize(a_in, b_in, rows)) return 0;

  if (dim == 1) {
    std::optional<Rational> lo, hi;
    for (const auto& [row, rhs] : rows) {
      const Rational bound = rhs / row[0];
      if (row[0] > 0)
        hi = hi ? std::min(*hi, bound) : bound;
      else
        lo = lo ? std::max(*lo, bound) : bound;
    }
    if (!lo || !hi) throw InvariantViolation("unbounded polytope in volume computation");
    return *hi > *lo ? Rational(*hi - *lo) : Rational(0);
  }

  Rational sum = 0;
  for (const auto& [pivot_row, pivot_rhs] : rows) {
    if (pivot_rhs == 0) continue;
    std::size_t j = 0;
    while (pivot_row[j] == 0) ++j;
    // Substitute x_j from pivot_row · x = pivot_rhs into every other row.
    RationalMatrix a;
    std::vector<Rational> b;
    for (const auto& [row, rhs] : rows) {
      if (&row == &pivot_row) continue;
      const Rational f = row[j] / pivot_row[j];
      Row projected;
      projected.reserve(dim - 1);
      for (std::size_t c = 0; c < dim; ++c)
        if (c != j) projected.push_back(row[c] - f * pivot_row[c]);
      a.push_back(std::move(projected));
      b.push_back(rhs - f * pivot_rhs);
    }
    sum += pivot_rhs / abs(pivot_row[j]) * volume(a, b, dim - 1);
  }
  return sum / static_cast<int>(dim);
}

}  // namespace

Rational polytope_volume(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.empty()) throw InvariantViolation("polytope without constraints");
  return volume(a, b, a.front().size());
}

}  // namespace normbound::detail
