#pragma once

// Hand-rolled random generators for the property tests. Every test seeds its
// own engine so failures reproduce.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "m0n/aut.hpp"
#include "m0n/kapranov.hpp"

namespace m0n::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Uniform subset of `pool` with size in [lo, hi] (clamped to the pool).
inline LabelSet random_subset(Rng& rng, LabelSet pool, int lo, int hi) {
  std::vector<int> labels = pool.labels();
  hi = std::min<int>(hi, static_cast<int>(labels.size()));
  const int size = uniform(rng, lo, hi);
  std::shuffle(labels.begin(), labels.end(), rng);
  labels.resize(size);
  return LabelSet(labels);
}

inline Permutation random_permutation(Rng& rng, int n) {
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

inline VitalSpace random_vital(Rng& rng, const KapranovModel& model) {
  return vital_span(model, random_subset(rng, model.points(), 1, model.n() - 3));
}

// Label tracing through a permutation, used by several oracles.
inline LabelSet apply(const Permutation& sigma, LabelSet s) {
  LabelSet out;
  for (int l : s.labels()) out.insert(sigma[l - 1]);
  return out;
}

}  // namespace m0n::gen
