#pragma once

// Combinatorial shadows of Aut(M_{0,n}) = S_n: the boundary intersection
// graph, the action of S_n on it, automorphism counting, and the degree
// computation that forces a permutation-trivial automorphism to be linear.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "m0n/kapranov.hpp"

namespace m0n {

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int size = 0);

  int size() const { return size_; }
  bool operator()(int u, int v) const { return bits_[static_cast<std::size_t>(u) * size_ + v] != 0; }
  // Adds the undirected edge u-v; loops are rejected.
  void connect(int u, int v);
  int edge_count() const;
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  // perm[v] is the image of v.
  bool is_automorphism(std::span<const int> perm) const;

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) { return a.bits_ == b.bits_; }

 private:
  int size_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<int>> neighbors_;
};

// b ~ b' iff some sides I of b and J of b' are nested or disjoint (b != b').
bool boundaries_compatible(const BoundaryIndex& a, const BoundaryIndex& b);

struct BoundaryGraph {
  int n;
  std::vector<BoundaryIndex> vertices;  // enumerate_boundaries(n)
  AdjacencyMatrix adjacency;

  // Throws LabelError if b is not a vertex.
  int index_of(const BoundaryIndex& b) const;
};

inline constexpr int kMaxGraphMarkings = 9;

// Throws SizeError unless 4 <= n <= 9.
BoundaryGraph boundary_graph(int n);

// sigma[k] is the image of label k+1; a bijection of {1..n}.
using Permutation = std::vector<int>;

// Throws LabelError if sigma is not a permutation of {1..n}.
void require_permutation(int n, const Permutation& sigma);
BoundaryIndex permute_boundary(const BoundaryIndex& b, const Permutation& sigma);

// Vertex map of boundary_graph(n) induced by sigma: v -> canonical(sigma(rep)).
std::vector<int> permutation_action(const BoundaryGraph& g, const Permutation& sigma);
std::vector<int> permutation_action(int n, const Permutation& sigma);

// Order of the automorphism group, by individualization-refinement and
// orbit-stabilizer counting. Orbit tests at each level run in parallel.
std::uint64_t graph_automorphism_order(const AdjacencyMatrix& g);
inline std::uint64_t graph_automorphism_order(const BoundaryGraph& g) {
  return graph_automorphism_order(g.adjacency);
}

struct RigiditySolution {
  int n;
  std::int64_t d;
  std::int64_t point_mult;
};

// Solves exactly, for the degree d of the induced Cremona map and its
// multiplicities m_1..m_{n-1} at the Kapranov points,
//   d - m_i = 1                            (lines through p_i stay lines)
//   (n-3) d - sum_i m_i = n - 3            (rational normal curves keep degree)
// Throws InconsistencyError if the solution is not unique, not integral, or
// not uniform in i. Throws SizeError for n < 5.
RigiditySolution kernel_rigidity(int n);

enum class Realization { kProjectivity, kCremona };

std::string to_string(Realization r);

// How the transposition (i j) acts, seen in Kapranov model `model`: a
// projectivity swapping p_i and p_j when the model label is fixed, and the
// standard Cremona omega towards the swapped label followed by relabelling
// otherwise.
struct TranspositionAction {
  int n;
  int i;
  int j;
  int model;
  Realization device;
  std::vector<std::pair<BoundaryIndex, BoundaryIndex>> boundary_map;

  BoundaryIndex apply(const BoundaryIndex& b) const;
  // Image of a vital space of the model under the realizing map.
  VitalSpace vital_image(const VitalSpace& v) const;
};

// Throws LabelError if i == j or labels leave 1..n.
TranspositionAction transposition_model_map(int n, int i, int j, int model);

std::string graph_to_dot(const BoundaryGraph& g);
// One "E{..}: E{..} E{..}" line per vertex.
std::string graph_to_adjacency_list(const BoundaryGraph& g);

}  // namespace m0n
