#pragma once

// Forgetful maps phi_I, possibly followed by a permutation of the remembered
// markings. Only the forgotten set and the relabelling matter, so two maps are
// equal exactly when both agree.

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "m0n/cremona.hpp"

namespace m0n {

class ForgetfulMap {
 public:
  // phi_I on the markings {1..n} with the identity relabelling.
  static ForgetfulMap forget(int n, LabelSet forgotten);

  // General form. `domain` is the marking set the map starts from (labels
  // keep their names through composition), `relabel` an injective renaming
  // of domain \ forgotten; identity entries may be omitted. Its image is the
  // codomain, the marking set of the target M_{0,r}.
  // Throws LabelError / SizeError when these invariants fail or fewer than
  // four markings would remain.
  ForgetfulMap(LabelSet domain, LabelSet forgotten, std::map<int, int> relabel = {});

  LabelSet domain() const { return domain_; }
  LabelSet forgotten() const { return forgotten_; }
  LabelSet remembered() const { return domain_ - forgotten_; }
  LabelSet codomain() const { return codomain_; }
  int n() const { return domain_.size(); }
  int target_markings() const { return remembered().size(); }
  bool is_standard_domain() const { return domain_ == LabelSet::universe(n()); }

  // Image of a remembered label; nullopt for forgotten labels.
  std::optional<int> apply(int label) const;
  // Full relabelling, identity included.
  const std::map<int, int>& relabel() const { return relabel_; }

  friend bool operator==(const ForgetfulMap&, const ForgetfulMap&) = default;

 private:
  LabelSet domain_;
  LabelSet forgotten_;
  std::map<int, int> relabel_;
  LabelSet codomain_;
};

std::string to_string(const ForgetfulMap& f);

// outer o inner. Throws ArityError unless outer's domain is inner's codomain.
ForgetfulMap compose_forgetful(const ForgetfulMap& outer, const ForgetfulMap& inner);

// The system f_{j*} of the map in Kapranov model j, with its base-locus type.
// j not forgotten: hyperplanes through V^j_I (degree 1).
// j forgotten: the linear form in model i = min(remembered) transported to
// model j (degree r-2, cone base locus); `certificate` records that Cremona.
// `type` is absent only for the identity map (nothing forgotten).
struct ProjectionSystem {
  LinearSystemDescriptor system;
  std::optional<PhiType> type;
  std::optional<CremonaCertificate> certificate;
};

// Throws PreconditionError unless the map starts from {1..n}; LabelError for j.
ProjectionSystem projection_system(const ForgetfulMap& f, int model_label);

struct LinearFiber {
  int codim;
  friend bool operator==(const LinearFiber&, const LinearFiber&) = default;
};

struct ConeFiber {
  std::optional<VitalSpace> vertex;  // empty when I = {j}
  int curve_degree;
  friend bool operator==(const ConeFiber&, const ConeFiber&) = default;
};

using FiberDescriptor = std::variant<LinearFiber, ConeFiber>;

std::string to_string(const FiberDescriptor& d);

// Image under f_j of a general fibre: a linear space of codimension |I| when
// j is remembered, otherwise a cone with vertex V^j_{I \ {j}} over a rational
// normal curve of degree n-2-|I|.
FiberDescriptor fiber_descriptor(const ForgetfulMap& f, int model_label);

// E_{i,j}: the image of the section s_{i,j} of phi_i.
BoundaryIndex section_divisor(int i, int j, int n);

// Labels j with mult_{p_j} = degree: the forgetful maps phi_j that the
// morphism defined by `sys` factors through.
LabelSet factor_through(const LinearSystemDescriptor& sys);

}  // namespace m0n
