#pragma once

#include <string>

#include "normbound/lattice.hpp"

namespace normbound {

inline constexpr int kDefaultBsHorizon = 12;

/// Smallest b with closure(I^{n+b}) ⊆ J^n for 1 <= n <= horizon. This is a
/// certified lower bound for the Briançon–Skoda number of I, which ranges
/// over every reduction and every n.
struct BSResult {
  MonomialIdeal ideal;
  MonomialIdeal reduction;
  int horizon = 0;
  int b_emp = 0;
  std::string status = "certified-on-range";
};

/// Throws NotAReduction unless J ⊆ I and NP(J) = NP(I).
BSResult empirical_bs(const MonomialIdeal& ideal, const MonomialIdeal& reduction, int horizon = kDefaultBsHorizon);
/// Uses the vertex reduction of I.
BSResult empirical_bs(const MonomialIdeal& ideal, int horizon = kDefaultBsHorizon);

/// Classical cap in a regular ring: d - 1.
int regular_bs_cap(const RingDescriptor& ring);

/// ht I - 1 for equimultiple I in a polynomial ring (Jacobian ideal = R).
int equimultiple_bs_cap(const MonomialIdeal& ideal);

}  // namespace normbound
