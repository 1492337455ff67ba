#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace brlab {

// Fixed default seed for every randomized evaluation in reports.
inline constexpr std::uint64_t kDefaultSeed = 20100815;

// Positive rational point with numerators and denominators drawn uniformly from 1..7.
inline std::vector<mpq_class> random_positive_point(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 7);
  std::vector<mpq_class> p;
  p.reserve(n);
  for (int i = 0; i < n; ++i) {
    mpq_class q(d(rng), d(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace brlab
