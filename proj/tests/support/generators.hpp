#pragma once

// Hand-rolled random generators for the property suites. Every suite seeds
// its own engine so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "steinobd/front.hpp"
#include "steinobd/lattice.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int64_t uniform(Rng& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

// Random closed front with roughly `budget` events before closing.
inline steinobd::FrontDiagram random_front(Rng& rng, int budget, int max_strands = 8) {
  using steinobd::EventKind;
  std::vector<steinobd::FrontEvent> events;
  int k = 0;
  for (int step = 0; step < budget; ++step) {
    const int roll = static_cast<int>(uniform(rng, 0, 9));
    if (k == 0 || (roll < 3 && k + 2 <= max_strands)) {
      events.push_back({EventKind::LeftCusp, static_cast<int>(uniform(rng, 1, k + 1))});
      k += 2;
    } else if (roll < 5) {
      events.push_back({EventKind::RightCusp, static_cast<int>(uniform(rng, 1, k - 1))});
      k -= 2;
    } else {
      events.push_back({EventKind::Crossing, static_cast<int>(uniform(rng, 1, k - 1))});
    }
  }
  while (k > 0) {
    events.push_back({EventKind::RightCusp, static_cast<int>(uniform(rng, 1, k - 1))});
    k -= 2;
  }
  return steinobd::FrontDiagram(std::move(events));
}

inline steinobd::IntVector random_vector(Rng& rng, std::size_t n, int64_t bound) {
  std::vector<int64_t> v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return steinobd::IntVector(std::move(v));
}

// Product of random elementary operations: always unimodular.
inline steinobd::UnimodularMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
  steinobd::IntMatrix m = steinobd::IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int64_t>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int64_t>(n) - 1));
    const int kind = static_cast<int>(uniform(rng, 0, 2));
    if (kind == 0 && i != j) {
      const int64_t f = uniform(rng, -2, 2);
      for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    } else if (kind == 1 && i != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    } else {
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
    }
  }
  return steinobd::UnimodularMatrix(std::move(m));
}

} // namespace gen
