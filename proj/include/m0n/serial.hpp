#pragma once

// Single-threaded reference versions of the parallel kernels. They share the
// per-item steps with the parallel code but not the scheduling or the
// counting strategy, and exist for cross-checking and benchmarking.

#include <cstdint>
#include <vector>

#include "m0n/aut.hpp"
#include "m0n/sweep.hpp"
#include "m0n/toric.hpp"

namespace m0n::serial {

std::vector<FanFunctional> cone_halfline_functionals(const Fan& fan, int bound);

// Counts every automorphism leaf of the search tree directly.
std::uint64_t graph_automorphism_order(const AdjacencyMatrix& g);

CremonaSweep cremona_sweep(int n);

}  // namespace m0n::serial
