#include "m0n/forgetful.hpp"

#include <sstream>

#include "m0n/errors.hpp"

namespace m0n {

ForgetfulMap ForgetfulMap::forget(int n, LabelSet forgotten) {
  require_marking_count(n);
  require_labels(n, forgotten);
  return ForgetfulMap(LabelSet::universe(n), forgotten);
}

ForgetfulMap::ForgetfulMap(LabelSet domain, LabelSet forgotten, std::map<int, int> relabel)
    : domain_(domain), forgotten_(forgotten) {
  if (!forgotten.is_subset_of(domain)) {
    throw LabelError("forgotten labels " + to_string(forgotten - domain) + " are not markings of " +
                     to_string(domain));
  }
  const LabelSet kept = domain - forgotten;
  if (kept.size() < 4) {
    throw SizeError("forgetting " + to_string(forgotten) + " from " + to_string(domain) +
                    " leaves fewer than 4 markings");
  }
  LabelSet image;
  for (int l : kept.labels()) {
    auto it = relabel.find(l);
    int to = it == relabel.end() ? l : it->second;
    if (to < 1 || to > kMaxLabel) {
      throw LabelError("relabel sends " + std::to_string(l) + " to invalid label " + std::to_string(to));
    }
    if (image.contains(to)) throw LabelError("relabel is not injective at " + std::to_string(to));
    image.insert(to);
    relabel_[l] = to;
  }
  codomain_ = image;
  for (const auto& [from, to] : relabel) {
    if (!kept.contains(from)) {
      throw LabelError("relabel given for " + std::to_string(from) + ", which is not remembered");
    }
  }
}

std::optional<int> ForgetfulMap::apply(int label) const {
  auto it = relabel_.find(label);
  if (it == relabel_.end()) return std::nullopt;
  return it->second;
}

std::string to_string(const ForgetfulMap& f) {
  std::ostringstream os;
  os << "phi_" << to_string(f.forgotten());
  bool identity = true;
  for (const auto& [from, to] : f.relabel()) identity = identity && from == to;
  if (!identity) {
    os << " relabel (";
    bool first = true;
    for (const auto& [from, to] : f.relabel()) {
      if (from == to) continue;
      if (!first) os << ' ';
      os << from << "->" << to;
      first = false;
    }
    os << ')';
  }
  if (!f.is_standard_domain()) os << " on " << to_string(f.domain());
  return os.str();
}

ForgetfulMap compose_forgetful(const ForgetfulMap& outer, const ForgetfulMap& inner) {
  if (outer.domain() != inner.codomain()) {
    throw ArityError("cannot compose: outer map starts from " + to_string(outer.domain()) +
                     " but inner map lands on " + to_string(inner.codomain()));
  }
  LabelSet forgotten = inner.forgotten();
  std::map<int, int> relabel;
  for (const auto& [label, mid] : inner.relabel()) {
    if (auto end = outer.apply(mid)) {
      relabel[label] = *end;
    } else {
      forgotten.insert(label);
    }
  }
  return ForgetfulMap(inner.domain(), forgotten, std::move(relabel));
}

namespace {

void require_standard(const ForgetfulMap& f, int model_label) {
  if (!f.is_standard_domain()) {
    throw PreconditionError(to_string(f) + " does not start from {1..n}; Kapranov models need it");
  }
  require_label(f.n(), model_label);
}

}  // namespace

ProjectionSystem projection_system(const ForgetfulMap& f, int model_label) {
  require_standard(f, model_label);
  const int n = f.n();
  const LabelSet forgotten = f.forgotten();
  if (!forgotten.contains(model_label)) {
    LinearSystemDescriptor sys = linear_normal_form(KapranovModel(n, model_label), forgotten);
    auto type = classify_phi_type(sys);
    return ProjectionSystem{std::move(sys), std::move(type), std::nullopt};
  }
  const int source = f.remembered().min();
  CremonaCertificate cert{linear_normal_form(KapranovModel(n, source), forgotten), model_label};
  LinearSystemDescriptor sys = transport_normal_form(cert.source, model_label);
  auto type = classify_phi_type(sys, cert);
  if (!type) {
    throw InconsistencyError("transported system " + to_string(sys) + " failed its own certificate");
  }
  return ProjectionSystem{std::move(sys), std::move(type), std::move(cert)};
}

std::string to_string(const FiberDescriptor& d) {
  if (const auto* lin = std::get_if<LinearFiber>(&d)) {
    return "linear codim " + std::to_string(lin->codim);
  }
  const auto& cone = std::get<ConeFiber>(d);
  return "cone vertex " + (cone.vertex ? to_string(*cone.vertex) : std::string("{}")) +
         " over rational normal curve of degree " + std::to_string(cone.curve_degree);
}

FiberDescriptor fiber_descriptor(const ForgetfulMap& f, int model_label) {
  require_standard(f, model_label);
  const LabelSet forgotten = f.forgotten();
  if (!forgotten.contains(model_label)) return LinearFiber{forgotten.size()};
  ConeFiber cone{std::nullopt, f.n() - 2 - forgotten.size()};
  const LabelSet vertex = forgotten.without(model_label);
  if (!vertex.empty()) cone.vertex = vital_span(KapranovModel(f.n(), model_label), vertex);
  return cone;
}

BoundaryIndex section_divisor(int i, int j, int n) {
  require_marking_count(n);
  require_label(n, i);
  require_label(n, j);
  if (i == j) throw LabelError("section E_{i,j} needs i != j, got " + std::to_string(i) + " twice");
  return canonical_boundary(n, LabelSet{i, j});
}

LabelSet factor_through(const LinearSystemDescriptor& sys) {
  LabelSet out;
  for (const auto& [label, m] : sys.mults()) {
    if (m == sys.degree()) out.insert(label);
  }
  return out;
}

}  // namespace m0n
