#include "m0n/toric.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "m0n/errors.hpp"
#include "toric_scan.hpp"

namespace m0n {

namespace {

__extension__ typedef __int128 Int128;

// Fraction-free Gaussian elimination; returns the rank of the rows.
int rank_of(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  std::vector<std::vector<Int128>> m(rows.size(), std::vector<Int128>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) m[r][c] = rows[r][c];
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Int128 a = m[rank][c];
      const Int128 b = m[r][c];
      Int128 g = 0;
      for (int k = 0; k < cols; ++k) {
        m[r][k] = m[r][k] * a - m[rank][k] * b;
        Int128 v = m[r][k] < 0 ? -m[r][k] : m[r][k];
        g = std::gcd(static_cast<long long>(g), static_cast<long long>(v));
      }
      if (g > 1) {
        for (int k = 0; k < cols; ++k) m[r][k] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

// Bareiss determinant of a square matrix.
Int128 determinant(std::vector<std::vector<Int128>> m) {
  const int size = static_cast<int>(m.size());
  if (size == 0) return 1;
  Int128 sign = 1;
  Int128 prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = k + 1;
      while (swap < size && m[swap][k] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

// A normal vector to the span of dim-1 independent vectors (generalized cross
// product): component c is (-1)^c times the minor with column c removed.
std::vector<Int128> facet_normal(const std::vector<const IntVector*>& spanning, int dim) {
  std::vector<Int128> normal(dim);
  for (int c = 0; c < dim; ++c) {
    std::vector<std::vector<Int128>> minor;
    for (const IntVector* v : spanning) {
      std::vector<Int128> row;
      for (int k = 0; k < dim; ++k) {
        if (k != c) row.push_back((*v)[k]);
      }
      minor.push_back(std::move(row));
    }
    Int128 d = determinant(std::move(minor));
    normal[c] = (c % 2 == 0) ? d : -d;
  }
  return normal;
}

int sign_of(Int128 v) { return (v > 0) - (v < 0); }

std::int64_t content(const IntVector& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntVector primitive(IntVector v) {
  std::int64_t g = content(v);
  if (g > 1) {
    for (std::int64_t& x : v) x /= g;
  }
  return v;
}

bool face_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Fan::Fan(int dim, std::vector<IntVector> rays, std::vector<std::vector<int>> cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
  if (dim < 1) throw PreconditionError("fan dimension must be positive");
  for (const IntVector& r : rays_) {
    if (static_cast<int>(r.size()) != dim) throw PreconditionError("ray of wrong length in fan");
  }
  for (std::vector<int>& c : cones_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw PreconditionError("cone lists a ray twice");
    }
    for (int idx : c) {
      if (idx < 0 || idx >= static_cast<int>(rays_.size())) {
        throw PreconditionError("cone references ray " + std::to_string(idx) + " which does not exist");
      }
    }
  }
  std::sort(cones_.begin(), cones_.end());
}

FanCheck check_fan(const Fan& fan) {
  FanCheck out;
  out.primitive = std::all_of(fan.rays().begin(), fan.rays().end(),
                              [](const IntVector& r) { return content(r) == 1; });
  if (!out.primitive) out.detail = "a ray generator is not primitive";

  out.simplicial = true;
  for (const std::vector<int>& cone : fan.cones()) {
    std::vector<IntVector> rows;
    for (int idx : cone) rows.push_back(fan.rays()[idx]);
    if (rank_of(rows) != static_cast<int>(cone.size())) {
      out.simplicial = false;
      if (out.detail.empty()) out.detail = "a cone has linearly dependent rays";
      break;
    }
  }

  // Facet pairing over full-dimensional maximal cones.
  out.complete = out.simplicial && !fan.cones().empty();
  std::map<std::vector<int>, std::vector<int>> facets;  // facet -> opposite rays
  for (const std::vector<int>& cone : fan.cones()) {
    if (static_cast<int>(cone.size()) != fan.dim()) {
      out.complete = false;
      if (out.detail.empty()) out.detail = "a maximal cone is not full-dimensional";
      break;
    }
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t k = 0; k < cone.size(); ++k) {
        if (k != drop) facet.push_back(cone[k]);
      }
      facets[facet].push_back(cone[drop]);
    }
  }
  if (out.complete) {
    for (const auto& [facet, opposite] : facets) {
      if (opposite.size() != 2) {
        out.complete = false;
        if (out.detail.empty()) out.detail = "a facet is shared by " + std::to_string(opposite.size()) + " maximal cones";
        break;
      }
      std::vector<const IntVector*> spanning;
      for (int idx : facet) spanning.push_back(&fan.rays()[idx]);
      std::vector<Int128> normal = facet_normal(spanning, fan.dim());
      Int128 s0 = 0;
      Int128 s1 = 0;
      for (int k = 0; k < fan.dim(); ++k) {
        s0 += normal[k] * fan.rays()[opposite[0]][k];
        s1 += normal[k] * fan.rays()[opposite[1]][k];
      }
      if (sign_of(s0) == 0 || sign_of(s0) != -sign_of(s1)) {
        out.complete = false;
        if (out.detail.empty()) out.detail = "two cones on the same side of a shared facet";
        break;
      }
    }
  }
  return out;
}

Fan projective_fan(int dim) {
  if (dim < 1) throw PreconditionError("projective fan needs dimension >= 1");
  std::vector<IntVector> rays;
  for (int k = 0; k < dim; ++k) {
    IntVector e(dim, 0);
    e[k] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(dim, -1);
  std::vector<std::vector<int>> cones;
  for (int skip = 0; skip <= dim; ++skip) {
    std::vector<int> cone;
    for (int k = 0; k <= dim; ++k) {
      if (k != skip) cone.push_back(k);
    }
    cones.push_back(std::move(cone));
  }
  return Fan(dim, std::move(rays), std::move(cones));
}

Fan barycentric_subdivision(const Fan& fan) {
  FanCheck check = check_fan(fan);
  if (!check.simplicial) throw NotSimplicialError("barycentric subdivision needs a simplicial fan: " + check.detail);
  if (!check.complete) throw PreconditionError("barycentric subdivision needs a complete fan: " + check.detail);

  std::set<std::vector<int>, decltype(&face_order)> faces(&face_order);
  for (const std::vector<int>& cone : fan.cones()) {
    const int k = static_cast<int>(cone.size());
    for (std::uint32_t pick = 1; pick < (1U << k); ++pick) {
      std::vector<int> face;
      for (int b = 0; b < k; ++b) {
        if ((pick >> b) & 1U) face.push_back(cone[b]);
      }
      faces.insert(std::move(face));
    }
  }

  std::map<std::vector<int>, int> face_ray;
  std::vector<IntVector> rays;
  for (const std::vector<int>& face : faces) {
    IntVector sum(fan.dim(), 0);
    for (int idx : face) {
      for (int c = 0; c < fan.dim(); ++c) sum[c] += fan.rays()[idx][c];
    }
    face_ray[face] = static_cast<int>(rays.size());
    rays.push_back(primitive(std::move(sum)));
  }

  std::set<std::vector<int>> cones;
  for (const std::vector<int>& cone : fan.cones()) {
    std::vector<int> order = cone;
    do {
      std::vector<int> chain;
      std::vector<int> prefix;
      for (int idx : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), idx), idx);
        chain.push_back(face_ray.at(prefix));
      }
      std::sort(chain.begin(), chain.end());
      cones.insert(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return Fan(fan.dim(), std::move(rays), {cones.begin(), cones.end()});
}

Fan losev_manin_fan(int n) {
  if (n < 5) throw PreconditionError("Losev-Manin fan needs n >= 5, got " + std::to_string(n));
  if (n > kMaxFanMarkings) {
    throw SizeError("Losev-Manin fan supports n <= " + std::to_string(kMaxFanMarkings) + ", got " + std::to_string(n));
  }
  return barycentric_subdivision(projective_fan(n - 3));
}

std::int64_t FanFunctional::operator()(std::span<const std::int64_t> v) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * v[k];
  return s;
}

std::string to_string(const FanFunctional& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
    if (k) os << ',';
    os << g.coeffs[k];
  }
  os << ')';
  return os.str();
}

FanFunctional normalize_functional(const Fan& fan, IntVector coeffs) {
  if (static_cast<int>(coeffs.size()) != fan.dim()) {
    throw PreconditionError("functional has " + std::to_string(coeffs.size()) + " coefficients for a fan of dimension " +
                            std::to_string(fan.dim()));
  }
  coeffs = primitive(std::move(coeffs));
  FanFunctional g{coeffs};
  for (const IntVector& ray : fan.rays()) {
    std::int64_t v = g(ray);
    if (v == 0) continue;
    if (v < 0) {
      for (std::int64_t& x : g.coeffs) x = -x;
    }
    break;
  }
  return g;
}

bool maps_cones_to_halflines(const Fan& fan, const FanFunctional& g) {
  std::vector<std::int64_t> values;
  values.reserve(fan.rays().size());
  for (const IntVector& ray : fan.rays()) values.push_back(g(ray));
  for (const std::vector<int>& cone : fan.cones()) {
    bool pos = false;
    bool neg = false;
    for (int idx : cone) {
      pos = pos || values[idx] > 0;
      neg = neg || values[idx] < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

bool halfline_condition_by_subsets(std::span<const std::int64_t> values) {
  const int m = static_cast<int>(values.size());
  const std::uint32_t full = (1U << m) - 1;
  std::vector<std::int64_t> sums(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int low = std::countr_zero(s);
    sums[s] = sums[s & (s - 1)] + values[low];
  }
  for (std::uint32_t t = 1; t < full; ++t) {
    if (sums[t] == 0) continue;
    // Proper nonempty subsets of t.
    for (std::uint32_t s = (t - 1) & t; s != 0; s = (s - 1) & t) {
      if ((sums[s] > 0 && sums[t] < 0) || (sums[s] < 0 && sums[t] > 0)) return false;
    }
  }
  return true;
}

IntVector undivided_values(const FanFunctional& g) {
  IntVector values(g.coeffs.begin(), g.coeffs.end());
  std::int64_t last = 0;
  for (std::int64_t c : g.coeffs) last -= c;
  values.push_back(last);
  return values;
}

std::vector<FanFunctional> cone_halfline_functionals(const Fan& fan, int bound) {
  if (bound < 1) throw PreconditionError("box bound must be >= 1");
  const std::int64_t total = detail::box_size(fan.dim(), bound);
  std::vector<FanFunctional> found;
#pragma omp parallel
  {
    std::vector<FanFunctional> local;
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < total; ++t) {
      if (auto g = detail::scan_candidate(fan, bound, t)) local.push_back(std::move(*g));
    }
#pragma omp critical(m0n_functional_merge)
    found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::pair<int, int> functional_to_forgetful(const FanFunctional& g, int n) {
  if (static_cast<int>(g.coeffs.size()) != n - 3) {
    throw PreconditionError("functional of length " + std::to_string(g.coeffs.size()) + " does not fit n=" +
                            std::to_string(n));
  }
  IntVector values = undivided_values(g);
  std::vector<int> support;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] != 0) support.push_back(static_cast<int>(k));
  }
  if (support.size() != 2 || values[support[0]] != -values[support[1]]) {
    throw ShapeViolation("functional " + to_string(g) + " has support " + std::to_string(support.size()) +
                         " on the undivided rays; expected two opposite values");
  }
  return {support[0] + 1, support[1] + 1};
}

std::string fan_to_text(const Fan& fan) {
  std::ostringstream os;
  os << "dim " << fan.dim() << '\n';
  os << "rays " << fan.rays().size() << '\n';
  for (std::size_t k = 0; k < fan.rays().size(); ++k) {
    os << k << ':';
    for (std::int64_t x : fan.rays()[k]) os << ' ' << x;
    os << '\n';
  }
  os << "cones " << fan.cones().size() << '\n';
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    os << k << ':';
    for (int idx : fan.cones()[k]) os << ' ' << idx;
    os << '\n';
  }
  return os.str();
}

std::string fan_to_dot(const Fan& fan, const std::string& name) {
  std::set<std::pair<int, int>> edges;
  for (const std::vector<int>& cone : fan.cones()) {
    for (std::size_t a = 0; a < cone.size(); ++a) {
      for (std::size_t b = a + 1; b < cone.size(); ++b) edges.emplace(cone[a], cone[b]);
    }
  }
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t k = 0; k < fan.rays().size(); ++k) {
    os << "  r" << k << " [label=\"(";
    for (std::size_t c = 0; c < fan.rays()[k].size(); ++c) {
      if (c) os << ',';
      os << fan.rays()[k][c];
    }
    os << ")\"];\n";
  }
  for (const auto& [a, b] : edges) os << "  r" << a << " -- r" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace m0n
