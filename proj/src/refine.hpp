#pragma once

// Colour refinement and individualization for automorphism search. Colours
// are always renumbered by rank of an isomorphism-invariant signature, so
// any automorphism maps a refined colouring onto the refined colouring of the
// image individualization, colour for colour.

#include <algorithm>
#include <vector>

#include "m0n/aut.hpp"

namespace m0n::detail {

using Coloring = std::vector<int>;

inline int color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Coarsest equitable refinement of `c`.
inline Coloring refine(const AdjacencyMatrix& g, Coloring c) {
  const int size = g.size();
  int colors = color_count(c);
  while (true) {
    std::vector<std::vector<int>> sig(size, std::vector<int>(colors + 1, 0));
    for (int v = 0; v < size; ++v) {
      sig[v][0] = c[v];
      for (int u : g.neighbors(v)) ++sig[v][c[u] + 1];
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Coloring next(size);
    for (int v = 0; v < size; ++v) {
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int next_colors = static_cast<int>(distinct.size());
    c = std::move(next);
    if (next_colors == colors) return c;
    colors = next_colors;
  }
}

// Splits v off the front of its cell.
inline Coloring individualize(const Coloring& c, int v) {
  Coloring out(c.size());
  for (std::size_t u = 0; u < c.size(); ++u) out[u] = 2 * c[u] + (static_cast<int>(u) == v ? 0 : 1);
  std::vector<int> values = out;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& x : out) x = static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
  return out;
}

inline std::vector<int> histogram(const Coloring& c) {
  std::vector<int> h(color_count(c), 0);
  for (int x : c) ++h[x];
  return h;
}

// First colour class with more than one vertex, or -1 when discrete.
inline int target_cell(const Coloring& c) {
  std::vector<int> h = histogram(c);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] > 1) return static_cast<int>(k);
  }
  return -1;
}

inline std::vector<int> cell_members(const Coloring& c, int color) {
  std::vector<int> out;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v] == color) out.push_back(static_cast<int>(v));
  }
  return out;
}

// Colourings along the leftmost branch below `start`, `start` included.
inline std::vector<Coloring> first_path(const AdjacencyMatrix& g, Coloring start) {
  std::vector<Coloring> path{std::move(start)};
  for (int cell = target_cell(path.back()); cell >= 0; cell = target_cell(path.back())) {
    int v = cell_members(path.back(), cell).front();
    path.push_back(refine(g, individualize(path.back(), v)));
  }
  return path;
}

// Bijection sending each source vertex to the image vertex of the same
// colour; both colourings must be discrete.
inline std::vector<int> leaf_map(const Coloring& source, const Coloring& image) {
  std::vector<int> by_color(image.size());
  for (std::size_t v = 0; v < image.size(); ++v) by_color[image[v]] = static_cast<int>(v);
  std::vector<int> perm(source.size());
  for (std::size_t v = 0; v < source.size(); ++v) perm[v] = by_color[source[v]];
  return perm;
}

// Walks the image tree under `image` against the source path from `level`.
// Counts automorphism leaves, or stops at the first one when `first_only`.
inline std::uint64_t match_leaves(const AdjacencyMatrix& g, const std::vector<Coloring>& source, std::size_t level,
                                  const Coloring& image, bool first_only) {
  if (histogram(image) != histogram(source[level])) return 0;
  if (level + 1 == source.size()) {
    return g.is_automorphism(leaf_map(source[level], image)) ? 1 : 0;
  }
  const int cell = target_cell(source[level]);
  std::uint64_t found = 0;
  for (int w : cell_members(image, cell)) {
    found += match_leaves(g, source, level + 1, refine(g, individualize(image, w)), first_only);
    if (first_only && found > 0) break;
  }
  return found;
}

}  // namespace m0n::detail
