#include "m0n/cremona.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "m0n/errors.hpp"

namespace m0n {

namespace {

void require_target(const KapranovModel& model, int target) {
  require_label(model.n(), target);
  if (target == model.omitted()) {
    throw LabelError("Cremona target " + std::to_string(target) + " is the label of the source model " +
                     to_string(model));
  }
}

// Every k-subset of `from`, in increasing mask order.
std::vector<LabelSet> subsets_of_size(LabelSet from, int k) {
  std::vector<LabelSet> out;
  const std::vector<int> labels = from.labels();
  const int m = static_cast<int>(labels.size());
  if (k < 0 || k > m) return out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    if (std::popcount(pick) != k) continue;
    LabelSet s;
    for (int b = 0; b < m; ++b) {
      if ((pick >> b) & 1U) s.insert(labels[b]);
    }
    out.push_back(s);
  }
  return out;
}

bool by_span(const BaseComponent& a, const BaseComponent& b) {
  if (auto c = a.space.span() <=> b.space.span(); c != 0) return c < 0;
  return a.multiplicity < b.multiplicity;
}

}  // namespace

VitalSpace cremona_vital_by_boundary(const VitalSpace& v, int target) {
  require_target(v.model(), target);
  return boundary_image(KapranovModel(v.model().n(), target), vital_to_boundary(v));
}

VitalSpace cremona_vital_closed_form(const VitalSpace& v, int target) {
  require_target(v.model(), target);
  const int n = v.model().n();
  const int i = v.model().omitted();
  const LabelSet span = v.span();
  KapranovModel image_model(n, target);
  if (span.contains(target)) {
    return vital_span(image_model, span.without(target).with(i));
  }
  return vital_span(image_model, (LabelSet::universe(n) - span.with(i)).without(target));
}

VitalSpace cremona_vital(const VitalSpace& v, int target) {
  VitalSpace by_boundary = cremona_vital_by_boundary(v, target);
  VitalSpace closed = cremona_vital_closed_form(v, target);
  if (!(by_boundary == closed)) {
    throw InconsistencyError("Cremona transport of " + to_string(v) + " to model " +
                             std::to_string(target) + ": boundary route gives " + to_string(by_boundary) +
                             ", closed form gives " + to_string(closed));
  }
  return by_boundary;
}

LinearSystemDescriptor::LinearSystemDescriptor(KapranovModel model, int degree, std::map<int, int> mults,
                                               std::vector<BaseComponent> base)
    : model_(model), degree_(degree), base_(std::move(base)) {
  if (degree < 0) throw PreconditionError("negative degree " + std::to_string(degree));
  for (const auto& [label, m] : mults) {
    require_label(model.n(), label);
    if (label == model.omitted()) {
      throw LabelError("multiplicity given at omitted label " + std::to_string(label));
    }
    if (m < 0 || m > degree) {
      throw PreconditionError("multiplicity " + std::to_string(m) + " at p_" + std::to_string(label) +
                              " outside 0.." + std::to_string(degree));
    }
  }
  for (int label : model.points().labels()) {
    auto it = mults.find(label);
    mults_[label] = it == mults.end() ? 0 : it->second;
  }
  for (const BaseComponent& c : base_) {
    if (!(c.space.model() == model)) {
      throw ArityError("base component " + to_string(c.space) + " not in " + to_string(model));
    }
    if (c.multiplicity < 1) throw PreconditionError("base component multiplicity must be positive");
  }
  std::sort(base_.begin(), base_.end(), by_span);
}

int LinearSystemDescriptor::mult(int label) const {
  auto it = mults_.find(label);
  return it == mults_.end() ? 0 : it->second;
}

std::string to_string(const LinearSystemDescriptor& sys) {
  std::ostringstream os;
  os << "deg " << sys.degree() << " on " << to_string(sys.model()) << " mults [";
  bool first = true;
  for (const auto& [label, m] : sys.mults()) {
    if (!first) os << ' ';
    os << label << ':' << m;
    first = false;
  }
  os << "] base [";
  first = true;
  for (const BaseComponent& c : sys.base()) {
    if (!first) os << ' ';
    os << to_string(c.space);
    if (c.multiplicity != 1) os << '^' << c.multiplicity;
    first = false;
  }
  os << ']';
  return os.str();
}

int transform_degree(const LinearSystemDescriptor& sys, int target) {
  require_target(sys.model(), target);
  int value = (sys.model().n() - 3) * sys.degree();
  for (const auto& [label, m] : sys.mults()) {
    if (label != target) value -= m;
  }
  if (value < 0) {
    throw InconsistencyError("transported degree of " + to_string(sys) + " toward model " +
                             std::to_string(target) + " is " + std::to_string(value));
  }
  return value;
}

LinearSystemDescriptor linear_normal_form(const KapranovModel& model, LabelSet forgotten) {
  require_labels(model.n(), forgotten);
  if (forgotten.contains(model.omitted())) {
    throw PreconditionError("model label " + std::to_string(model.omitted()) + " is forgotten; the linear form lives in a remembered model");
  }
  if (model.n() - forgotten.size() < 4) {
    throw SizeError("forgetting " + to_string(forgotten) + " leaves fewer than 4 markings");
  }
  std::map<int, int> mults;
  for (int h : forgotten.labels()) mults[h] = 1;
  std::vector<BaseComponent> base;
  if (!forgotten.empty()) base.push_back({vital_span(model, forgotten), 1});
  return LinearSystemDescriptor(model, 1, std::move(mults), std::move(base));
}

namespace {

// The forgotten set I of a linear normal form, or nullopt if `sys` is not one.
std::optional<LabelSet> normal_form_support(const LinearSystemDescriptor& sys) {
  if (sys.degree() != 1 || sys.base().size() != 1) return std::nullopt;
  const BaseComponent& c = sys.base().front();
  if (c.multiplicity != 1 || c.space.codim() < 2) return std::nullopt;
  for (const auto& [label, m] : sys.mults()) {
    if (m != (c.space.span().contains(label) ? 1 : 0)) return std::nullopt;
  }
  return c.space.span();
}

}  // namespace

LinearSystemDescriptor transport_normal_form(const LinearSystemDescriptor& source, int target) {
  auto support = normal_form_support(source);
  if (!support) throw PreconditionError(to_string(source) + " is not a linear normal form");
  const LabelSet forgotten = *support;
  if (!forgotten.contains(target)) {
    throw PreconditionError("target " + std::to_string(target) + " is not among the forgotten labels " +
                            to_string(forgotten));
  }
  const int n = source.model().n();
  const int i = source.model().omitted();
  const LabelSet remembered = LabelSet::universe(n) - forgotten;
  const int r = remembered.size();
  const LabelSet vertex = forgotten.without(target);
  KapranovModel image(n, target);

  const int degree = transform_degree(source, target);
  if (degree != r - 2) {
    throw InconsistencyError("transported normal form has degree " + std::to_string(degree) +
                             ", expected " + std::to_string(r - 2));
  }

  std::map<int, int> mults;
  for (int h : vertex.labels()) mults[h] = r - 2;
  for (int h : remembered.without(i).labels()) mults[h] = r - 3;
  mults[i] = 1;

  std::vector<BaseComponent> base;
  for (LabelSet k : subsets_of_size(remembered.without(i), r - 3)) {
    base.push_back({vital_span(image, vertex | k), 1});
  }
  base.push_back({cremona_vital(source.base().front().space, target), 1});
  return LinearSystemDescriptor(image, degree, std::move(mults), std::move(base));
}

QuadricPencilDescriptor phi1_transform(int n, LabelSet remembered, int source, int target) {
  require_marking_count(n);
  require_labels(n, remembered);
  if (remembered.size() != 4 || !remembered.contains(source)) {
    throw PreconditionError("remembered set " + to_string(remembered) + " must be 4 labels including " +
                            std::to_string(source));
  }
  if (n < 5) throw PreconditionError("a pencil needs at least one forgotten label");
  const LabelSet forgotten = LabelSet::universe(n) - remembered;
  if (!forgotten.contains(target)) {
    throw PreconditionError("target " + std::to_string(target) + " is not forgotten");
  }

  KapranovModel model(n, source);
  const LinearSystemDescriptor normal = linear_normal_form(model, forgotten);
  const LabelSet triple = remembered.without(source);
  const std::vector<int> abc = triple.labels();

  std::array<VitalSpace, 4> components{
      cremona_vital(vital_span(model, triple.without(abc[0])), target),
      cremona_vital(vital_span(model, triple.without(abc[1])), target),
      cremona_vital(vital_span(model, triple.without(abc[2])), target),
      cremona_vital(vital_span(model, forgotten), target),
  };

  std::optional<VitalSpace> singular;
  if (n >= 6) singular = cremona_vital(vital_span(model, triple), target);

  // S must be the common intersection of every pair of components.
  const LabelSet vertex = forgotten.without(target);
  for (std::size_t a = 0; a < components.size(); ++a) {
    for (std::size_t b = a + 1; b < components.size(); ++b) {
      if ((components[a].span() & components[b].span()) != vertex) {
        throw InconsistencyError("components " + to_string(components[a]) + " and " +
                                 to_string(components[b]) + " do not meet in the vertex");
      }
    }
  }
  if ((singular ? singular->span() : LabelSet{}) != vertex) {
    throw InconsistencyError("singular locus does not match the vertex " + to_string(vertex));
  }

  LinearSystemDescriptor system = transport_normal_form(normal, target);
  std::vector<BaseComponent> expected;
  for (const VitalSpace& c : components) expected.push_back({c, 1});
  std::sort(expected.begin(), expected.end(), by_span);
  if (system.base() != expected) {
    throw InconsistencyError("pencil components disagree with the transported normal form " +
                             to_string(system));
  }
  return QuadricPencilDescriptor{KapranovModel(n, target), {abc[0], abc[1], abc[2]}, components,
                                 singular, std::move(system)};
}

std::string PhiType::label() const { return r == 4 ? "Phi_1" : "Phi_" + std::to_string(r); }

std::string to_string(const PhiType& t) {
  std::ostringstream os;
  os << t.label();
  if (const auto* lin = std::get_if<LinearShape>(&t.shape)) {
    os << " linear base " << to_string(lin->base);
  } else {
    const auto& cone = std::get<ConeShape>(t.shape);
    os << " cone vertex " << (cone.vertex ? to_string(*cone.vertex) : std::string("{}")) << " over C^"
       << cone.over.source << "_" << cone.over.index;
  }
  return os.str();
}

std::optional<PhiType> classify_phi_type(const LinearSystemDescriptor& sys,
                                         const std::optional<CremonaCertificate>& cert) {
  if (auto support = normal_form_support(sys)) {
    const VitalSpace& base = sys.base().front().space;
    return PhiType{base.codim() + 2, LinearShape{base}};
  }
  if (!cert) return std::nullopt;

  auto support = normal_form_support(cert->source);
  if (!support || !support->contains(cert->target)) return std::nullopt;
  if (!(sys.model() == KapranovModel(cert->source.model().n(), cert->target))) return std::nullopt;
  if (sys != transport_normal_form(cert->source, cert->target)) return std::nullopt;

  const int n = sys.model().n();
  const int r = n - support->size();
  const LabelSet vertex = support->without(cert->target);
  ConeShape cone;
  if (!vertex.empty()) cone.vertex = vital_span(sys.model(), vertex);
  cone.over = ConicBundle{r - 3, cert->source.model().omitted()};
  return PhiType{r, cone};
}

}  // namespace m0n
