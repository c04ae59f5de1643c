#pragma once

// Exhaustive consistency sweep of Cremona transport for one n: every ordered
// pair of models and every vital space, comparing the closed form with the
// boundary route and checking the involution and cocycle laws.

#include <cstdint>

namespace m0n {

struct CremonaSweep {
  int n = 0;
  std::uint64_t transports = 0;  // (source, target, vital space) triples
  std::uint64_t route_mismatches = 0;
  std::uint64_t involution_failures = 0;
  std::uint64_t cocycle_checks = 0;  // i -> j -> k against i -> k, k outside {i, j}
  std::uint64_t cocycle_failures = 0;

  bool clean() const { return route_mismatches == 0 && involution_failures == 0 && cocycle_failures == 0; }
  CremonaSweep& operator+=(const CremonaSweep& other);
  friend bool operator==(const CremonaSweep&, const CremonaSweep&) = default;
};

// Source models are swept in parallel. Throws SizeError for n out of range.
CremonaSweep cremona_sweep(int n);

}  // namespace m0n
