#include "m0n/serial.hpp"

#include <algorithm>

#include "m0n/errors.hpp"
#include "refine.hpp"
#include "sweep_step.hpp"
#include "toric_scan.hpp"

namespace m0n::serial {

std::vector<FanFunctional> cone_halfline_functionals(const Fan& fan, int bound) {
  if (bound < 1) throw PreconditionError("bound must be >= 1, got " + std::to_string(bound));
  std::vector<FanFunctional> out;
  const std::int64_t total = detail::box_size(fan.dim(), bound);
  for (std::int64_t index = 0; index < total; ++index) {
    if (auto g = detail::scan_candidate(fan, bound, index)) out.push_back(std::move(*g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t graph_automorphism_order(const AdjacencyMatrix& g) {
  if (g.size() == 0) return 1;
  const detail::Coloring root = detail::refine(g, detail::Coloring(g.size(), 0));
  return detail::match_leaves(g, detail::first_path(g, root), 0, root, /*first_only=*/false);
}

CremonaSweep cremona_sweep(int n) {
  detail::require_sweep_size(n);
  CremonaSweep total;
  total.n = n;
  for (int i = 1; i <= n; ++i) total += detail::sweep_source(n, i);
  return total;
}

}  // namespace m0n::serial
