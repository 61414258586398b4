#pragma once

// Dense row-major grid over a box [0, extent_0) x ... x [0, extent_{k-1}).
// Used for the "column" view of monomial ideals: a cell is a prefix of the
// first d-1 exponents and stores the smallest admissible last exponent.

#include <cstddef>
#include <limits>
#include <vector>

#include "normbound/exact.hpp"

namespace normbound::detail {

inline constexpr Exponent kInfinite = std::numeric_limits<Exponent>::max();

class Grid {
 public:
  explicit Grid(std::vector<Exponent> extents) : extents_(std::move(extents)), strides_(extents_.size()) {
    std::size_t stride = 1;
    for (std::size_t i = extents_.size(); i-- > 0;) {
      strides_[i] = stride;
      stride = static_cast<std::size_t>(checked_mul(static_cast<Exponent>(stride), extents_[i]));
    }
    size_ = stride;
  }

  std::size_t size() const { return size_; }
  std::size_t rank() const { return extents_.size(); }
  Exponent extent(std::size_t i) const { return extents_[i]; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }

  bool inside(const Exponent* coords) const {
    for (std::size_t i = 0; i < extents_.size(); ++i)
      if (coords[i] < 0 || coords[i] >= extents_[i]) return false;
    return true;
  }

  std::size_t index(const Exponent* coords) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < extents_.size(); ++i) idx += static_cast<std::size_t>(coords[i]) * strides_[i];
    return idx;
  }

  /// Advances `coords` in row-major order; false after the last cell.
  bool next(std::vector<Exponent>& coords) const {
    for (std::size_t i = extents_.size(); i-- > 0;) {
      if (++coords[i] < extents_[i]) return true;
      coords[i] = 0;
    }
    return false;
  }

 private:
  std::vector<Exponent> extents_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace normbound::detail
