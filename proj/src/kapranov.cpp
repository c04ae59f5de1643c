#include "m0n/kapranov.hpp"

#include <algorithm>

#include "m0n/errors.hpp"

namespace m0n {

KapranovModel::KapranovModel(int n, int omitted) : n_(n), omitted_(omitted) {
  require_marking_count(n);
  require_label(n, omitted);
}

std::string to_string(const KapranovModel& m) {
  return "f" + std::to_string(m.omitted()) + "[n=" + std::to_string(m.n()) + "]";
}

std::string to_string(const VitalSpace& v) {
  std::string span = to_string(v.span());
  return "V^" + std::to_string(v.model().omitted()) + "_" + span;
}

VitalSpace vital_span(const KapranovModel& model, LabelSet labels) {
  if (labels.empty()) throw LabelError("vital span of the empty set");
  require_labels(model.n(), labels);
  if (labels.contains(model.omitted())) {
    throw LabelError("label " + std::to_string(model.omitted()) + " is the omitted label of " +
                     to_string(model));
  }
  if (labels.size() > model.n() - 3) {
    throw DimensionError("span of " + std::to_string(labels.size()) + " points is all of P^" +
                         std::to_string(model.ambient_dim()) + "; need at most " +
                         std::to_string(model.n() - 3));
  }
  return VitalSpace(model, labels);
}

std::vector<VitalSpace> enumerate_vital_spaces(const KapranovModel& model) {
  const std::uint64_t points = model.points().mask();
  std::vector<VitalSpace> out;
  for (std::uint64_t sub = points; sub != 0; sub = (sub - 1) & points) {
    LabelSet span = LabelSet::from_mask(sub);
    if (span.size() <= model.n() - 3) out.push_back(VitalSpace(model, span));
  }
  std::sort(out.begin(), out.end(), [](const VitalSpace& a, const VitalSpace& b) { return a.span() < b.span(); });
  return out;
}

BoundaryIndex vital_to_boundary(const VitalSpace& v) {
  return canonical_boundary(v.model().n(), v.span().with(v.model().omitted()));
}

VitalSpace boundary_image(const KapranovModel& model, const BoundaryIndex& b) {
  if (b.n() != model.n()) {
    throw ArityError("boundary " + to_string(b) + " has n=" + std::to_string(b.n()) +
                     " but model has n=" + std::to_string(model.n()));
  }
  LabelSet side = b.side_containing(model.omitted());
  return vital_span(model, side.without(model.omitted()));
}

LabelSet ModelRestriction::map_labels(LabelSet s) const {
  LabelSet out;
  for (int l : s.labels()) {
    auto it = relabel.find(l);
    if (it == relabel.end()) {
      throw LabelError("label " + std::to_string(l) + " not in the restricted model");
    }
    out.insert(it->second);
  }
  return out;
}

VitalSpace ModelRestriction::restrict(const VitalSpace& v) const {
  if (!(v.model() == source)) {
    throw ArityError(to_string(v) + " does not live in " + to_string(source));
  }
  if (!v.span().is_subset_of(hyperplane.span())) {
    throw PreconditionError(to_string(v) + " is not contained in " + to_string(hyperplane));
  }
  return vital_span(model, map_labels(v.span()));
}

ModelRestriction restrict_model(const KapranovModel& model, int h, int k) {
  const int n = model.n();
  require_label(n, h);
  require_label(n, k);
  if (h == k) throw LabelError("restriction needs two distinct labels, got " + std::to_string(h) + " twice");
  if (h == model.omitted() || k == model.omitted()) {
    throw LabelError("restriction labels must be Kapranov points of " + to_string(model));
  }
  if (n - 1 < kMinMarkings) {
    throw SizeError("restricting a model with n=" + std::to_string(n) + " leaves fewer than " +
                    std::to_string(kMinMarkings) + " markings");
  }
  const int keep = std::min(h, k);
  const int drop = std::max(h, k);

  std::map<int, int> relabel;
  for (int l = 1; l <= n; ++l) {
    if (l == drop) continue;
    relabel[l] = l < drop ? l : l - 1;
  }
  relabel[drop] = relabel.at(keep);

  KapranovModel restricted(n - 1, relabel.at(model.omitted()));
  VitalSpace hyperplane = vital_span(model, model.points().without(h).without(k));
  return ModelRestriction{model, restricted, hyperplane, std::move(relabel), keep};
}

}  // namespace m0n
