#pragma once

#include <cstdint>

#include "shapes/random_bodies.hpp"

namespace testing_bodies {

// Cycles through segments, polygons, smooth and mixed bodies.
inline shapes::SupportFn body(std::uint64_t seed) {
  const int k = 2 + static_cast<int>((seed / 4) % 7);
  switch (seed % 4) {
    case 0:
      return shapes::random_class_A(seed, shapes::BodyStyle::atoms, k);
    case 1:
      return shapes::random_class_A(seed, shapes::BodyStyle::smooth);
    case 2:
      return shapes::random_class_A(seed, shapes::BodyStyle::mixed, k + 1);
    default:
      return shapes::random_class_A(seed, shapes::BodyStyle::atoms, 3 + static_cast<int>(seed % 5));
  }
}

}  // namespace testing_bodies
