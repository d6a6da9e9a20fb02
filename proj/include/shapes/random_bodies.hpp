#pragma once

#include <cstdint>
#include <stdexcept>

#include "shapes/support_fn.hpp"

namespace shapes {

enum class BodyStyle { atoms, smooth, mixed };

class RandomBodyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Draws a class-𝒜 body from a nonnegative curvature measure.
///   atoms:  k point masses (k = 2 always yields a segment); weights are
///           projected onto zero first moments and redrawn when any turns
///           negative (at most 100 attempts).
///   smooth: density 1 + small harmonics of order ≥ 2, solved exactly.
///   mixed:  Minkowski combination of one of each.
SupportFn random_class_A(std::uint64_t seed, BodyStyle style, int k = 3);

}  // namespace shapes
