#pragma once

// Per-source-model step of the Cremona sweep, shared with the serial reference.

#include "m0n/cremona.hpp"
#include "m0n/errors.hpp"
#include "m0n/sweep.hpp"

namespace m0n::detail {

inline void require_sweep_size(int n) { require_marking_count(n); }

inline CremonaSweep sweep_source(int n, int source) {
  CremonaSweep out;
  const KapranovModel model(n, source);
  for (const VitalSpace& v : enumerate_vital_spaces(model)) {
    for (int j = 1; j <= n; ++j) {
      if (j == source) continue;
      ++out.transports;
      const VitalSpace closed = cremona_vital_closed_form(v, j);
      if (!(closed == cremona_vital_by_boundary(v, j))) ++out.route_mismatches;
      if (!(cremona_vital_closed_form(closed, source) == v)) ++out.involution_failures;
      for (int k = 1; k <= n; ++k) {
        if (k == source || k == j) continue;
        ++out.cocycle_checks;
        if (!(cremona_vital_closed_form(closed, k) == cremona_vital_closed_form(v, k))) ++out.cocycle_failures;
      }
    }
  }
  return out;
}

}  // namespace m0n::detail
