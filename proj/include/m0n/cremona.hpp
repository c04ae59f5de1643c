#pragma once

// Standard Cremona transport between Kapranov models.
//
// omega_j: P^{n-3} --> P^{n-3} is the standard Cremona transformation centred
// on the Kapranov points other than p_j; it equals f_j o f_i^{-1}. The image
// of a vital space is defined through its boundary divisor, so transport is
// total even where omega_j is undefined on the general point of the space.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "m0n/kapranov.hpp"

namespace m0n {

// Boundary route: boundary_image(f_target, vital_to_boundary(v)).
VitalSpace cremona_vital_by_boundary(const VitalSpace& v, int target);

// Closed form, with I the span labels of V^i_I and h the target:
//   h in I   ->  V^h_{(I \ {h}) + {i}}
//   h in I*  ->  V^h_{(I + {i})* \ {h}}
VitalSpace cremona_vital_closed_form(const VitalSpace& v, int target);

// Transport computed both ways; throws InconsistencyError if they disagree.
// Throws LabelError if target is the source model's own label or outside 1..n.
VitalSpace cremona_vital(const VitalSpace& v, int target);

struct BaseComponent {
  VitalSpace space;
  int multiplicity = 1;

  friend bool operator==(const BaseComponent&, const BaseComponent&) = default;
};

// Symbolic linear system on the P^{n-3} of one Kapranov model: degree,
// multiplicity at each Kapranov point, and its vital base components.
class LinearSystemDescriptor {
 public:
  // Labels missing from `mults` have multiplicity 0.
  // Throws LabelError for multiplicities at non-points, PreconditionError for
  // negative values or m_h > d, ArityError for base components of another model.
  LinearSystemDescriptor(KapranovModel model, int degree, std::map<int, int> mults,
                         std::vector<BaseComponent> base = {});

  const KapranovModel& model() const { return model_; }
  int degree() const { return degree_; }
  int mult(int label) const;
  // Full vector over the model's points, in label order.
  const std::map<int, int>& mults() const { return mults_; }
  const std::vector<BaseComponent>& base() const { return base_; }

  friend bool operator==(const LinearSystemDescriptor&, const LinearSystemDescriptor&) = default;

 private:
  KapranovModel model_;
  int degree_;
  std::map<int, int> mults_;
  std::vector<BaseComponent> base_;  // sorted by span
};

std::string to_string(const LinearSystemDescriptor& sys);

// Degree of the transported system: (n-3) d - sum_{h != target} m_h, read off
// a rational normal curve through the centres of omega_target.
// Throws InconsistencyError if that value is negative.
int transform_degree(const LinearSystemDescriptor& sys, int target);

// Hyperplanes containing V^i_I: the linear normal form of the system attached
// to a forgetful map forgetting I, seen in model i (i not in I).
LinearSystemDescriptor linear_normal_form(const KapranovModel& model, LabelSet forgotten);

// The linear normal form transported to model `target` (a forgotten label).
// With R the remembered labels, r = |R| and vertex W = I \ {target}:
//   degree r-2; multiplicity r-2 on W, r-3 on R \ {i}, 1 on i;
//   base components V^target_{W + K} for K a subset of R \ {i} with |K| = r-3,
//   plus V^target_{W + {i}}, each of multiplicity 1.
// Throws PreconditionError if `source` is not a linear normal form or target
// is not one of its forgotten labels.
LinearSystemDescriptor transport_normal_form(const LinearSystemDescriptor& source, int target);

// The pencil case (maps to M_{0,4}): P_h for h in R \ {i}, then P_4, and
// the common singular locus S (absent when n = 5, where the vertex is empty).
struct QuadricPencilDescriptor {
  KapranovModel model;
  std::array<int, 3> labels;           // the h of P_1..P_3, increasing
  std::array<VitalSpace, 4> components;
  std::optional<VitalSpace> singular;
  LinearSystemDescriptor system;
};

// Transport of the hyperplane pencil through V^i_{forgotten} from model i to
// model `target`, where forgotten = {1..n} \ remembered.
// Throws PreconditionError unless remembered is a 4-set containing i and
// target is forgotten.
QuadricPencilDescriptor phi1_transform(int n, LabelSet remembered, int source, int target);

// The transform of hyperplanes through p_i on P^{r-2}; index r-3.
struct ConicBundle {
  int index = 0;   // r - 3
  int source = 0;  // i

  friend bool operator==(const ConicBundle&, const ConicBundle&) = default;
};

struct LinearShape {
  VitalSpace base;
  friend bool operator==(const LinearShape&, const LinearShape&) = default;
};

struct ConeShape {
  std::optional<VitalSpace> vertex;  // empty vertex when only one label is forgotten
  ConicBundle over;
  friend bool operator==(const ConeShape&, const ConeShape&) = default;
};

struct PhiType {
  int r = 4;  // markings of the target M_{0,r}
  std::variant<LinearShape, ConeShape> shape;

  bool is_linear() const { return std::holds_alternative<LinearShape>(shape); }
  // Pencils (r = 4) carry the label Phi_1; otherwise Phi_r.
  std::string label() const;

  friend bool operator==(const PhiType&, const PhiType&) = default;
};

std::string to_string(const PhiType& t);

// One recorded standard Cremona: `source` is a linear normal form, `target`
// the label of the model it was transported to.
struct CremonaCertificate {
  LinearSystemDescriptor source;
  int target;
};

// Linear shape: degree 1, a single vital base space of codimension r-2 >= 2,
// multiplicity 1 exactly at its points. Cone shape: `sys` equals
// transport_normal_form(cert.source, cert.target). Anything else is absent;
// no search over the Cremona group is attempted.
std::optional<PhiType> classify_phi_type(const LinearSystemDescriptor& sys,
                                         const std::optional<CremonaCertificate>& cert = {});

}  // namespace m0n
