#include "m0n/aut.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <sstream>

#include "m0n/cremona.hpp"
#include "m0n/errors.hpp"
#include "refine.hpp"

namespace m0n {

AdjacencyMatrix::AdjacencyMatrix(int size)
    : size_(size), bits_(static_cast<std::size_t>(size) * size, 0), neighbors_(size) {}

void AdjacencyMatrix::connect(int u, int v) {
  if (u == v) throw PreconditionError("loops are not allowed");
  if ((*this)(u, v)) return;
  bits_[static_cast<std::size_t>(u) * size_ + v] = 1;
  bits_[static_cast<std::size_t>(v) * size_ + u] = 1;
  neighbors_[u].insert(std::upper_bound(neighbors_[u].begin(), neighbors_[u].end(), v), v);
  neighbors_[v].insert(std::upper_bound(neighbors_[v].begin(), neighbors_[v].end(), u), u);
}

int AdjacencyMatrix::edge_count() const {
  int twice = 0;
  for (const auto& nb : neighbors_) twice += static_cast<int>(nb.size());
  return twice / 2;
}

bool AdjacencyMatrix::is_automorphism(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != size_) return false;
  std::vector<bool> hit(size_, false);
  for (int p : perm) {
    if (p < 0 || p >= size_ || hit[p]) return false;
    hit[p] = true;
  }
  for (int u = 0; u < size_; ++u) {
    if (neighbors_[u].size() != neighbors_[perm[u]].size()) return false;
    for (int v : neighbors_[u]) {
      if (!(*this)(perm[u], perm[v])) return false;
    }
  }
  return true;
}

bool boundaries_compatible(const BoundaryIndex& a, const BoundaryIndex& b) {
  if (a.n() != b.n()) throw ArityError("boundaries for different n");
  if (a == b) return false;
  for (LabelSet i : {a.rep(), a.complement()}) {
    for (LabelSet j : {b.rep(), b.complement()}) {
      if (i.is_subset_of(j) || i.disjoint_from(j)) return true;
    }
  }
  return false;
}

int BoundaryGraph::index_of(const BoundaryIndex& b) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), b);
  if (it == vertices.end() || !(*it == b)) throw LabelError(to_string(b) + " is not a vertex of the boundary graph");
  return static_cast<int>(it - vertices.begin());
}

BoundaryGraph boundary_graph(int n) {
  if (n < kMinMarkings || n > kMaxGraphMarkings) {
    throw SizeError("boundary graph supports 4 <= n <= " + std::to_string(kMaxGraphMarkings) + ", got " +
                    std::to_string(n));
  }
  BoundaryGraph g{n, enumerate_boundaries(n), AdjacencyMatrix(0)};
  const int size = static_cast<int>(g.vertices.size());
  g.adjacency = AdjacencyMatrix(size);
  for (int u = 0; u < size; ++u) {
    for (int v = u + 1; v < size; ++v) {
      if (boundaries_compatible(g.vertices[u], g.vertices[v])) g.adjacency.connect(u, v);
    }
  }
  return g;
}

void require_permutation(int n, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != n) {
    throw LabelError("permutation has " + std::to_string(sigma.size()) + " entries, need " + std::to_string(n));
  }
  LabelSet seen;
  for (int x : sigma) {
    require_label(n, x);
    if (seen.contains(x)) throw LabelError("permutation repeats " + std::to_string(x));
    seen.insert(x);
  }
}

BoundaryIndex permute_boundary(const BoundaryIndex& b, const Permutation& sigma) {
  require_permutation(b.n(), sigma);
  LabelSet image;
  for (int l : b.rep().labels()) image.insert(sigma[l - 1]);
  return canonical_boundary(b.n(), image);
}

std::vector<int> permutation_action(const BoundaryGraph& g, const Permutation& sigma) {
  require_permutation(g.n, sigma);
  std::vector<int> out;
  out.reserve(g.vertices.size());
  for (const BoundaryIndex& b : g.vertices) out.push_back(g.index_of(permute_boundary(b, sigma)));
  return out;
}

std::vector<int> permutation_action(int n, const Permutation& sigma) {
  BoundaryGraph g{n, enumerate_boundaries(n), AdjacencyMatrix(0)};
  return permutation_action(g, sigma);
}

namespace {

std::uint64_t stabilizer_chain_order(const AdjacencyMatrix& g, const detail::Coloring& coloring) {
  const int cell = detail::target_cell(coloring);
  if (cell < 0) return 1;
  const std::vector<int> members = detail::cell_members(coloring, cell);
  const detail::Coloring fixed = detail::refine(g, detail::individualize(coloring, members.front()));
  const std::uint64_t stabilizer = stabilizer_chain_order(g, fixed);
  const std::vector<detail::Coloring> path = detail::first_path(g, fixed);

  std::uint64_t orbit = 1;
  const int others = static_cast<int>(members.size()) - 1;
#pragma omp parallel for schedule(dynamic) reduction(+ : orbit)
  for (int k = 0; k < others; ++k) {
    detail::Coloring moved = detail::refine(g, detail::individualize(coloring, members[k + 1]));
    if (detail::match_leaves(g, path, 0, moved, /*first_only=*/true) > 0) orbit += 1;
  }
  return stabilizer * orbit;
}

}  // namespace

std::uint64_t graph_automorphism_order(const AdjacencyMatrix& g) {
  if (g.size() == 0) return 1;
  return stabilizer_chain_order(g, detail::refine(g, detail::Coloring(g.size(), 0)));
}

RigiditySolution kernel_rigidity(int n) {
  if (n < 5) throw SizeError("kernel rigidity needs n >= 5, got " + std::to_string(n));
  using Q = boost::rational<std::int64_t>;
  // Unknowns: x[0] = d, x[k] = m_k for k = 1..n-1. Augmented rows.
  const int unknowns = n;
  std::vector<std::vector<Q>> rows;
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<Q> row(unknowns + 1, Q(0));
    row[0] = Q(1);
    row[k] = Q(-1);
    row[unknowns] = Q(1);
    rows.push_back(std::move(row));
  }
  {
    std::vector<Q> row(unknowns + 1, Q(-1));
    row[0] = Q(n - 3);
    row[unknowns] = Q(n - 3);
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan elimination over Q.
  int rank = 0;
  for (int col = 0; col < unknowns; ++col) {
    int pivot = rank;
    while (pivot < static_cast<int>(rows.size()) && rows[pivot][col] == Q(0)) ++pivot;
    if (pivot == static_cast<int>(rows.size())) continue;
    std::swap(rows[rank], rows[pivot]);
    const Q lead = rows[rank][col];
    for (Q& x : rows[rank]) x /= lead;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == Q(0)) continue;
      const Q factor = rows[r][col];
      for (int c = col; c <= unknowns; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  if (rank != unknowns) {
    throw InconsistencyError("rigidity system for n=" + std::to_string(n) + " has rank " + std::to_string(rank) +
                             " < " + std::to_string(unknowns));
  }
  std::vector<Q> x(unknowns);
  for (int k = 0; k < unknowns; ++k) x[k] = rows[k][unknowns];
  for (const Q& v : x) {
    if (v.denominator() != std::int64_t{1}) throw InconsistencyError("rigidity solution is not integral");
  }
  for (int k = 2; k < unknowns; ++k) {
    if (x[k] != x[1]) throw InconsistencyError("rigidity multiplicities are not uniform");
  }
  return RigiditySolution{n, x[0].numerator(), x[1].numerator()};
}

std::string to_string(Realization r) { return r == Realization::kProjectivity ? "projectivity" : "cremona"; }

BoundaryIndex TranspositionAction::apply(const BoundaryIndex& b) const {
  Permutation sigma(n);
  for (int k = 1; k <= n; ++k) sigma[k - 1] = k == i ? j : (k == j ? i : k);
  return permute_boundary(b, sigma);
}

VitalSpace TranspositionAction::vital_image(const VitalSpace& v) const {
  if (!(v.model() == KapranovModel(n, model))) {
    throw ArityError(to_string(v) + " is not in model " + std::to_string(model));
  }
  auto swap = [this](LabelSet s) {
    LabelSet out;
    for (int l : s.labels()) out.insert(l == i ? j : (l == j ? i : l));
    return out;
  };
  if (device == Realization::kProjectivity) return vital_span(v.model(), swap(v.span()));
  const int other = model == i ? j : i;
  VitalSpace moved = cremona_vital(v, other);
  return vital_span(v.model(), swap(moved.span()));
}

TranspositionAction transposition_model_map(int n, int i, int j, int model) {
  require_marking_count(n);
  require_label(n, i);
  require_label(n, j);
  require_label(n, model);
  if (i == j) throw LabelError("transposition needs two distinct labels");
  TranspositionAction out{n, i, j, model,
                          (model == i || model == j) ? Realization::kCremona : Realization::kProjectivity,
                          {}};
  for (const BoundaryIndex& b : enumerate_boundaries(n)) out.boundary_map.emplace_back(b, out.apply(b));
  return out;
}

std::string graph_to_dot(const BoundaryGraph& g) {
  std::ostringstream os;
  os << "graph boundary_n" << g.n << " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
  }
  for (int u = 0; u < g.adjacency.size(); ++u) {
    for (int v : g.adjacency.neighbors(u)) {
      if (u < v) os << "  v" << u << " -- v" << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_adjacency_list(const BoundaryGraph& g) {
  std::ostringstream os;
  for (int u = 0; u < g.adjacency.size(); ++u) {
    os << to_string(g.vertices[u]) << ':';
    for (int v : g.adjacency.neighbors(u)) os << ' ' << to_string(g.vertices[v]);
    os << '\n';
  }
  return os.str();
}

}  // namespace m0n
