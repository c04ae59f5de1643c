#pragma once

// The Losev-Manin fan (barycentric subdivision of the fan of P^{n-3}) and
// the linear functionals on it that induce toric morphisms to P^1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace m0n {

using IntVector = std::vector<std::int64_t>;

// Complete simplicial fan given by primitive ray generators and its maximal
// cones (ray-index lists, sorted). Faces are implied.
class Fan {
 public:
  // Throws PreconditionError on ragged rays or out-of-range cone indices.
  Fan(int dim, std::vector<IntVector> rays, std::vector<std::vector<int>> cones);

  int dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& cones() const { return cones_; }

 private:
  int dim_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<int>> cones_;
};

struct FanCheck {
  bool primitive = false;
  bool simplicial = false;
  // Every facet of a maximal cone is shared by exactly two maximal cones,
  // lying on opposite sides of it.
  bool complete = false;
  std::string detail;  // first failure, empty when all hold

  bool ok() const { return primitive && simplicial && complete; }
};

FanCheck check_fan(const Fan& fan);

// Rays e_1..e_N and -(e_1+...+e_N); maximal cones are the N-subsets.
Fan projective_fan(int dim);

// Rays are the primitive sums of generators over every nonempty cone, ordered
// by cone size and then lexicographically (so the original rays come first);
// maximal cones are the maximal flags of faces.
// Throws NotSimplicialError when the input is not simplicial, PreconditionError
// when it is not complete.
Fan barycentric_subdivision(const Fan& fan);

inline constexpr int kMaxFanMarkings = 11;

// barycentric_subdivision(projective_fan(n-3)). It has (n-2)! maximal cones,
// so n is capped: PreconditionError for n < 5, SizeError above kMaxFanMarkings.
Fan losev_manin_fan(int n);

// A linear map g: Z^N -> Z, stored gcd-reduced and with the first nonzero
// value on the fan's rays positive.
struct FanFunctional {
  IntVector coeffs;

  std::int64_t operator()(std::span<const std::int64_t> v) const;
  friend bool operator==(const FanFunctional&, const FanFunctional&) = default;
  friend auto operator<=>(const FanFunctional&, const FanFunctional&) = default;
};

std::string to_string(const FanFunctional& g);

// Canonical representative of the class of `coeffs` up to nonzero scaling.
FanFunctional normalize_functional(const Fan& fan, IntVector coeffs);

// Cone scan: every maximal cone lands in R_{>=0} or in R_{<=0}.
bool maps_cones_to_halflines(const Fan& fan, const FanFunctional& g);

// Subset-pair scan for the Losev-Manin fan. `values` are g on the N+1
// undivided rays; a chain cone takes the subset sums g(S) on its rays, so the
// condition is that no S strictly inside T has g(S), g(T) of strict opposite
// signs.
bool halfline_condition_by_subsets(std::span<const std::int64_t> values);

// Values of g on e_1..e_N and -(e_1+...+e_N).
IntVector undivided_values(const FanFunctional& g);

// Every nonzero normalized functional whose values on all rays lie in
// [-bound, bound] and which sends each cone into a half-line. Sorted and
// duplicate-free; the result does not depend on the number of threads.
// Throws PreconditionError for bound < 1.
std::vector<FanFunctional> cone_halfline_functionals(const Fan& fan, int bound);

// The two undivided rays (1-based, increasing) carrying the nonzero values of
// g, which must be opposite. Throws ShapeViolation for any other support.
std::pair<int, int> functional_to_forgetful(const FanFunctional& g, int n);

// "dim N", then "rays K" with one "i: x1 .. xN" line each, then "cones M"
// with one "i: r1 .. rN" line each.
std::string fan_to_text(const Fan& fan);
// Undirected graph on rays; an edge joins two rays of a common maximal cone.
std::string fan_to_dot(const Fan& fan, const std::string& name = "fan");

}  // namespace m0n
