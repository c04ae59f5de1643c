#pragma once

// Kapranov models of M_{0,n} and their vital linear subspaces.
//
// Model f_i realizes M_{0,n} as an iterated blow-up of P^{n-3} along n-1
// points in linear general position, labelled by {1..n} \ {i}, and along all
// linear spaces they span. General position is an axiom here: a span of k
// labelled points always has dimension k-1, so no coordinates are stored.
//
// Naming: a VitalSpace's span labels never contain the model's own label.
// V^i_J with i in J (as sometimes written) is read as V^i_{J \ {i}}.

#include <map>
#include <string>
#include <vector>

#include "m0n/combinatorics.hpp"

namespace m0n {

class KapranovModel {
 public:
  // Throws SizeError for n out of range, LabelError for omitted outside 1..n.
  KapranovModel(int n, int omitted);

  int n() const { return n_; }
  int omitted() const { return omitted_; }
  // Dimension of the ambient projective space.
  int ambient_dim() const { return n_ - 3; }
  // Labels of the n-1 Kapranov points.
  LabelSet points() const { return LabelSet::universe(n_).without(omitted_); }

  friend bool operator==(const KapranovModel&, const KapranovModel&) = default;

 private:
  int n_;
  int omitted_;
};

std::string to_string(const KapranovModel& m);

class VitalSpace {
 public:
  const KapranovModel& model() const { return model_; }
  LabelSet span() const { return span_; }
  int dim() const { return span_.size() - 1; }
  int codim() const { return model_.ambient_dim() - dim(); }
  bool is_hyperplane() const { return codim() == 1; }

  friend bool operator==(const VitalSpace&, const VitalSpace&) = default;

 private:
  friend VitalSpace vital_span(const KapranovModel& model, LabelSet labels);
  friend std::vector<VitalSpace> enumerate_vital_spaces(const KapranovModel& model);
  VitalSpace(KapranovModel model, LabelSet span) : model_(model), span_(span) {}

  KapranovModel model_;
  LabelSet span_;
};

// "V^4_{1,2}"
std::string to_string(const VitalSpace& v);

// Span of the Kapranov points labelled by J.
// Throws LabelError if J is empty, contains the omitted label or leaves 1..n;
// DimensionError if |J| > n-3 (the span would be all of P^{n-3}).
VitalSpace vital_span(const KapranovModel& model, LabelSet labels);

// Every vital space of the model (1 <= |J| <= n-3), ordered by span.
std::vector<VitalSpace> enumerate_vital_spaces(const KapranovModel& model);

// E_I with I = J + {i}, canonicalized.
BoundaryIndex vital_to_boundary(const VitalSpace& v);

// f_i(E_I): with I the side of b containing i, the span of I \ {i}.
// Throws ArityError when b was built for a different n.
VitalSpace boundary_image(const KapranovModel& model, const BoundaryIndex& b);

// Model of the vital hyperplane H^{i,v}_{h,k} (the span of every point except
// p_h and p_k). Its Kapranov set is the remaining points plus the trace of the
// line <p_h, p_k>; that new point gets label min(h,k). Labels are then
// compacted order-preservingly to 1..n-1 by dropping max(h,k).
struct ModelRestriction {
  KapranovModel source;
  KapranovModel model;        // n-1 markings
  VitalSpace hyperplane;      // H^{i,v}_{h,k} inside the source model
  std::map<int, int> relabel; // source label -> restricted label; h and k share one
  int merged_label;           // restricted label of the merged point

  LabelSet map_labels(LabelSet s) const;
  // Label-wise restriction of a vital space lying in the hyperplane.
  // Throws PreconditionError if v contains p_h or p_k, ArityError for a
  // foreign model, DimensionError if v is the whole hyperplane.
  VitalSpace restrict(const VitalSpace& v) const;
};

// Throws LabelError if h == k, either equals the omitted label, or leaves 1..n;
// SizeError if n < 5 (the restricted model needs at least four markings).
ModelRestriction restrict_model(const KapranovModel& model, int h, int k);

}  // namespace m0n
