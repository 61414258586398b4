#include "normbound/briancon_skoda.hpp"

#include <vector>

#include "normbound/newton.hpp"

namespace normbound {

BSResult empirical_bs(const MonomialIdeal& ideal, const MonomialIdeal& reduction, int horizon) {
  if (horizon < 1) throw InvalidArgument("horizon must be at least 1");
  ideal.require_proper();
  reduction.require_proper();
  if (ideal.dimension() != reduction.dimension()) throw DimensionMismatch("reduction lives in another ring");
  if (!is_subset(reduction, ideal)) throw NotAReduction("J is not contained in I");
  const ClosureFiltration closure(ideal);
  const NewtonPolyhedron reduction_np(reduction);
  if (reduction_np.facets() != closure.polyhedron().facets() ||
      reduction_np.vertices() != closure.polyhedron().vertices())
    throw NotAReduction("NP(J) differs from NP(I)");

  std::vector<MonomialIdeal> reduction_powers{reduction};
  for (int n = 2; n <= horizon; ++n) reduction_powers.push_back(product(reduction_powers.back(), reduction));

  // Briançon–Skoda guarantees b <= d - 1; anything past the slack is a bug.
  const int limit = ideal.dimension() + 4;
  for (int b = 0; b <= limit; ++b) {
    bool holds = true;
    for (int n = 1; n <= horizon && holds; ++n)
      holds = is_subset(closure.at(n + b), reduction_powers[static_cast<std::size_t>(n - 1)]);
    if (holds) return BSResult{ideal, reduction, horizon, b};
  }
  throw InvariantViolation("no Briancon-Skoda exponent found up to " + std::to_string(limit));
}

BSResult empirical_bs(const MonomialIdeal& ideal, int horizon) {
  return empirical_bs(ideal, vertex_reduction(ideal), horizon);
}

int regular_bs_cap(const RingDescriptor& ring) {
  if (!ring.regular) throw InvalidArgument("only regular rings are supported");
  return ring.dimension() - 1;
}

int equimultiple_bs_cap(const MonomialIdeal& ideal) {
  if (!is_equimultiple(ideal)) throw NotEquimultiple();
  return height(ideal) - 1;
}

}  // namespace normbound
