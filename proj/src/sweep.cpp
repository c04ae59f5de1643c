#include "m0n/sweep.hpp"

#include <vector>

#include "sweep_step.hpp"

namespace m0n {

CremonaSweep& CremonaSweep::operator+=(const CremonaSweep& other) {
  transports += other.transports;
  route_mismatches += other.route_mismatches;
  involution_failures += other.involution_failures;
  cocycle_checks += other.cocycle_checks;
  cocycle_failures += other.cocycle_failures;
  return *this;
}

CremonaSweep cremona_sweep(int n) {
  detail::require_sweep_size(n);
  std::vector<CremonaSweep> parts(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 1; i <= n; ++i) parts[i - 1] = detail::sweep_source(n, i);
  CremonaSweep total;
  total.n = n;
  for (const CremonaSweep& p : parts) total += p;
  return total;
}

}  // namespace m0n
