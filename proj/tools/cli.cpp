#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "m0n/aut.hpp"
#include "m0n/cremona.hpp"
#include "m0n/errors.hpp"
#include "m0n/forgetful.hpp"
#include "m0n/sweep.hpp"
#include "m0n/toric.hpp"
#include "report.hpp"

namespace m0n::cli {

namespace {

using Json = Report::Json;

struct Options {
  bool json = false;
  bool timing = false;
  int n = 0;
  int model = 0;
  int from = 0;
  int to = 0;
  int degree = 0;
  int bound = 2;
  bool count = false;
  std::string set;
  std::string forget;
  std::string mults;
  std::string emit;
};

// Either a finished report or a raw document (DOT, fan text, adjacency).
struct Outcome {
  std::optional<Report> report;
  std::string raw;
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::map<int, int> parse_mults(const std::string& text) {
  std::map<int, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw PreconditionError("multiplicity '" + item + "' is not label:value");
    try {
      std::size_t used = 0;
      const int label = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string rest = item.substr(colon + 1);
      const int m = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(item);
      if (!out.emplace(label, m).second) throw PreconditionError("label " + std::to_string(label) + " given twice");
    } catch (const std::logic_error&) {
      throw PreconditionError("multiplicity '" + item + "' is not label:value");
    }
  }
  return out;
}

Json labels_json(LabelSet s) { return Json(s.labels()); }

// Boundary count by scanning every subset containing label 1.
std::uint64_t brute_force_boundary_count(int n) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if ((mask & 1) && size >= 2 && size <= n - 2) ++count;
  }
  return count;
}

void check_boundary_count(Report& r, int n) {
  const auto found = static_cast<std::uint64_t>(enumerate_boundaries(n).size());
  r.check_equal("boundary_count", brute_force_boundary_count(n), found);
  r.check_equal("boundary_formula", (std::uint64_t{1} << (n - 1)) - n - 1, found);
}

void check_sweep(Report& r, const CremonaSweep& s) {
  r.result("cremona_transports", s.transports);
  r.check_equal("cremona_routes", 0, s.route_mismatches);
  r.check_equal("cremona_involution", 0, s.involution_failures);
  r.check_equal("cremona_cocycle", 0, s.cocycle_failures);
}

void check_fan_shape(Report& r, int n, const Fan& fan) {
  const FanCheck c = check_fan(fan);
  r.check_equal("fan_rays", (std::uint64_t{1} << (n - 2)) - 2, fan.rays().size());
  r.check_equal("fan_cones", factorial(n - 2), fan.cones().size());
  r.check("fan_primitive", c.primitive, true, c.primitive);
  r.check("fan_simplicial", c.simplicial, true, c.simplicial);
  r.check("fan_complete", c.complete, true, c.complete ? "true" : c.detail);
}

void classify(Report& r, int n, int bound, bool list) {
  const Fan fan = losev_manin_fan(n);
  const std::vector<FanFunctional> found = cone_halfline_functionals(fan, bound);
  int shape_failures = 0;
  int subset_disagreements = 0;
  std::set<std::pair<int, int>> supports;
  for (const FanFunctional& g : found) {
    const IntVector values = undivided_values(g);
    if (!halfline_condition_by_subsets(values)) ++subset_disagreements;
    try {
      const auto [a, b] = functional_to_forgetful(g, n);
      supports.emplace(a, b);
      if (list) {
        r.append("functionals", Json{{"coeffs", to_string(g)},
                                     {"undivided", values},
                                     {"support", Json::array({a, b})}});
      }
    } catch (const ShapeViolation&) {
      ++shape_failures;
      if (list) r.append("functionals", Json{{"coeffs", to_string(g)}, {"undivided", values}, {"support", "violation"}});
    }
  }
  r.result("classes", found.size());
  r.check_equal("p1_classes", (n - 2) * (n - 3) / 2, found.size());
  r.check_equal("p1_support", 0, shape_failures);
  r.check_equal("p1_subset_route", 0, subset_disagreements);
  r.check_equal("p1_distinct_supports", found.size(), supports.size());
}

// Every permutation of 1..n with its vertex map: all must be automorphisms,
// pairwise distinct, and compose like the permutations.
void check_action(Report& r, const BoundaryGraph& g) {
  const int n = g.n;
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<Permutation> perms;
  std::vector<std::vector<int>> maps;
  int non_automorphisms = 0;
  do {
    perms.push_back(sigma);
    maps.push_back(permutation_action(g, sigma));
    if (!g.adjacency.is_automorphism(maps.back())) ++non_automorphisms;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::vector<std::vector<int>> sorted = maps;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = static_cast<std::uint64_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  r.check_equal("action_automorphisms", 0, non_automorphisms);
  r.check_equal("action_injective", factorial(n), distinct);

  // Exhaustive for n = 5, a fixed-seed sample of pairs beyond.
  std::mt19937_64 rng(20240229);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  const std::size_t pairs = n == 5 ? perms.size() * perms.size() : 4000;
  int failures = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t a = n == 5 ? t / perms.size() : pick(rng);
    const std::size_t b = n == 5 ? t % perms.size() : pick(rng);
    Permutation composed(n);
    for (int k = 0; k < n; ++k) composed[k] = perms[a][perms[b][k] - 1];
    const std::vector<int> lhs = permutation_action(g, composed);
    for (std::size_t v = 0; v < lhs.size(); ++v) {
      if (lhs[v] != maps[a][maps[b][v]]) {
        ++failures;
        break;
      }
    }
  }
  r.result("action_pairs_checked", pairs);
  r.check_equal("action_homomorphism", 0, failures);
}

void check_order(Report& r, int n, std::uint64_t order) {
  r.result("automorphism_order", order);
  r.check("order_divisible", order % factorial(n) == 0, "multiple of " + std::to_string(factorial(n)), order);
  if (n == 5) r.check_equal("order_petersen", 120, order);
}

void check_rigidity(Report& r, int n) {
  const RigiditySolution s = kernel_rigidity(n);
  r.result("d", s.d);
  r.result("m", s.point_mult);
  r.check_equal("rigidity_degree", 1, s.d);
  r.check_equal("rigidity_multiplicity", 0, s.point_mult);
}

void check_pencil(Report& r, int n) {
  const LabelSet remembered{1, 2, 3, 4};
  const LinearSystemDescriptor normal = linear_normal_form(KapranovModel(n, 1), LabelSet::universe(n) - remembered);
  const int degree = transform_degree(normal, 5);
  const QuadricPencilDescriptor pencil = phi1_transform(n, remembered, 1, 5);
  r.check_equal("pencil_degree", 2, degree);
  r.check_equal("pencil_system_degree", 2, pencil.system.degree());
}

void check_fibers(Report& r, int n) {
  int checked = 0;
  int failures = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const LabelSet forgotten = LabelSet::from_mask(mask);
    if (n - forgotten.size() < 4) continue;
    const ForgetfulMap f = ForgetfulMap::forget(n, forgotten);
    for (int j : forgotten.labels()) {
      ++checked;
      const FiberDescriptor d = fiber_descriptor(f, j);
      const auto* cone = std::get_if<ConeFiber>(&d);
      const LabelSet vertex = forgotten.without(j);
      const bool vertex_ok = cone && (vertex.empty() ? !cone->vertex.has_value()
                                                     : cone->vertex == vital_span(KapranovModel(n, j), vertex));
      const ProjectionSystem p = projection_system(f, j);
      const bool factors_ok = factor_through(p.system) == vertex;
      if (!cone || cone->curve_degree != n - 2 - forgotten.size() || !vertex_ok || !factors_ok) ++failures;
    }
  }
  r.result("fiber_cases", checked);
  r.check_equal("fiber_cones", 0, failures);
}

Outcome cmd_boundaries(const Options& o) {
  require_marking_count(o.n);
  Report r("boundaries");
  r.param("n", o.n);
  const std::vector<BoundaryIndex> all = enumerate_boundaries(o.n);
  r.result("count", all.size());
  Json list = Json::array();
  for (const BoundaryIndex& b : all) list.push_back(to_string(b));
  r.result("boundaries", std::move(list));
  check_boundary_count(r, o.n);
  return {std::move(r), {}};
}

Outcome cmd_vital(const Options& o) {
  Report r("vital");
  r.param("n", o.n);
  r.param("model", o.model);
  r.param("set", o.set);
  const KapranovModel model(o.n, o.model);
  const VitalSpace v = vital_span(model, parse_label_set(o.set));
  const BoundaryIndex b = vital_to_boundary(v);
  r.result("space", to_string(v));
  r.result("dim", v.dim());
  r.result("codim", v.codim());
  r.result("hyperplane", v.is_hyperplane());
  r.result("boundary", to_string(b));
  r.check("boundary_round_trip", boundary_image(model, b) == v, to_string(v), to_string(boundary_image(model, b)));
  return {std::move(r), {}};
}

Outcome cmd_cremona(const Options& o) {
  Report r("cremona");
  r.param("n", o.n);
  r.param("from", o.from);
  r.param("to", o.to);
  r.param("set", o.set);
  const VitalSpace v = vital_span(KapranovModel(o.n, o.from), parse_label_set(o.set));
  const VitalSpace closed = cremona_vital_closed_form(v, o.to);
  const VitalSpace routed = cremona_vital_by_boundary(v, o.to);
  r.result("source", to_string(v));
  r.result("image", to_string(closed));
  r.result("boundary", to_string(vital_to_boundary(v)));
  r.check("route_agreement", closed == routed, to_string(routed), to_string(closed));
  const VitalSpace back = cremona_vital_closed_form(closed, o.from);
  r.check("involution", back == v, to_string(v), to_string(back));
  return {std::move(r), {}};
}

Outcome cmd_transform_degree(const Options& o) {
  Report r("transform-degree");
  r.param("n", o.n);
  r.param("model", o.model);
  r.param("to", o.to);
  r.param("d", o.degree);
  r.param("mults", o.mults);
  const LinearSystemDescriptor sys(KapranovModel(o.n, o.model), o.degree, parse_mults(o.mults));
  r.result("system", to_string(sys));
  r.result("degree", transform_degree(sys, o.to));
  return {std::move(r), {}};
}

Outcome cmd_forgetful(const Options& o) {
  Report r("forgetful");
  r.param("n", o.n);
  r.param("forget", o.forget);
  if (o.model != 0) r.param("model", o.model);
  const ForgetfulMap f = ForgetfulMap::forget(o.n, parse_label_set(o.forget));
  r.result("map", to_string(f));
  r.result("target_markings", f.target_markings());
  std::vector<int> models;
  if (o.model != 0) {
    models.push_back(o.model);
  } else {
    for (int j = 1; j <= o.n; ++j) models.push_back(j);
  }
  for (int j : models) {
    const ProjectionSystem p = projection_system(f, j);
    const FiberDescriptor d = fiber_descriptor(f, j);
    const LabelSet factors = factor_through(p.system);
    Json entry{{"model", j},
               {"system", to_string(p.system)},
               {"type", p.type ? to_string(*p.type) : std::string("identity")},
               {"fiber", to_string(d)},
               {"factors_through", labels_json(factors)}};
    r.append("projections", std::move(entry));
    const LabelSet expected = f.forgotten().without(j);
    r.check_equal("factor_criterion_f" + std::to_string(j), labels_json(expected), labels_json(factors));
  }
  return {std::move(r), {}};
}

Outcome cmd_fan(const Options& o) {
  const Fan fan = losev_manin_fan(o.n);
  if (o.emit == "dot") return {std::nullopt, fan_to_dot(fan, "losev_manin_" + std::to_string(o.n))};
  if (o.emit == "text") return {std::nullopt, fan_to_text(fan)};
  Report r("fan");
  r.param("n", o.n);
  if (!o.emit.empty()) r.param("emit", o.emit);
  r.result("dim", fan.dim());
  r.result("rays", fan.rays().size());
  r.result("cones", fan.cones().size());
  if (o.emit == "rays") r.result("ray_list", fan.rays());
  if (o.emit == "cones") r.result("cone_list", fan.cones());
  check_fan_shape(r, o.n, fan);
  return {std::move(r), {}};
}

Outcome cmd_classify(const Options& o) {
  Report r("classify-p1");
  r.param("n", o.n);
  r.param("bound", o.bound);
  classify(r, o.n, o.bound, true);
  return {std::move(r), {}};
}

Outcome cmd_aut_graph(const Options& o) {
  const BoundaryGraph g = boundary_graph(o.n);
  if (o.emit == "dot") return {std::nullopt, graph_to_dot(g)};
  if (o.emit == "adjacency") return {std::nullopt, graph_to_adjacency_list(g)};
  Report r("aut-graph");
  r.param("n", o.n);
  if (o.count) r.param("count", true);
  r.result("vertices", g.vertices.size());
  r.result("edges", g.adjacency.edge_count());
  if (o.count) check_order(r, o.n, graph_automorphism_order(g));
  return {std::move(r), {}};
}

Outcome cmd_rigidity(const Options& o) {
  Report r("rigidity");
  r.param("n", o.n);
  check_rigidity(r, o.n);
  return {std::move(r), {}};
}

Outcome cmd_verify(const Options& o) {
  require_marking_count(o.n);
  const int n = o.n;
  Report r("verify");
  r.param("n", n);
  check_boundary_count(r, n);
  auto in_range = [&](const std::string& name, int lo, int hi) {
    if (n >= lo && n <= hi) return true;
    r.skip(name, "runs for " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
    return false;
  };
  if (in_range("cremona", 4, 10)) check_sweep(r, cremona_sweep(n));
  if (in_range("pencil", 5, kMaxMarkings)) check_pencil(r, n);
  if (in_range("fibers", 5, 10)) check_fibers(r, n);
  if (in_range("fan", 5, 9)) check_fan_shape(r, n, losev_manin_fan(n));
  if (in_range("p1", 5, 8)) classify(r, n, 2, false);
  if (in_range("graph", 5, 7)) {
    const BoundaryGraph g = boundary_graph(n);
    check_order(r, n, graph_automorphism_order(g));
    check_action(r, g);
  }
  if (in_range("rigidity", 5, kMaxMarkings)) check_rigidity(r, n);
  return {std::move(r), {}};
}

void apply_thread_cap(std::ostream& err) {
  const char* env = std::getenv("M0N_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long threads = std::strtol(env, &end, 10);
  if (*end != '\0' || threads < 1) {
    err << "warning: ignoring M0N_THREADS='" << env << "' (expected a positive integer)\n";
    return;
  }
  omp_set_num_threads(static_cast<int>(threads));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap(err);

  Options o;
  CLI::App app("Exact combinatorics of M_{0,n}: Kapranov models, Cremona transport, forgetful maps, "
               "the Losev-Manin fan and boundary-graph symmetry.",
               "m0n");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the report as a JSON object");
  app.add_flag("--timing", o.timing, "Append wall-clock timing (breaks byte-identical output)");

  std::function<Outcome(const Options&)> handler;
  auto sub = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&handler, fn] { handler = fn; });
    s->add_option("--n", o.n, "Number of markings")->required();
    return s;
  };

  sub("boundaries", "List boundary divisor indices", cmd_boundaries);

  CLI::App* vital = sub("vital", "Describe a vital space and its boundary divisor", cmd_vital);
  vital->add_option("--model", o.model, "Kapranov model label")->required();
  vital->add_option("--set", o.set, "Span labels, e.g. 1,2")->required();

  CLI::App* cremona = sub("cremona", "Transport a vital space between Kapranov models", cmd_cremona);
  cremona->add_option("--from", o.from, "Source model label")->required();
  cremona->add_option("--to", o.to, "Target model label")->required();
  cremona->add_option("--set", o.set, "Span labels in the source model")->required();

  CLI::App* degree = sub("transform-degree", "Degree of a linear system after a standard Cremona", cmd_transform_degree);
  degree->add_option("--model", o.model, "Kapranov model label")->required();
  degree->add_option("--to", o.to, "Target model label")->required();
  degree->add_option("--d", o.degree, "Degree of the system")->required();
  degree->add_option("--mults", o.mults, "Point multiplicities, e.g. 6:1,7:1");

  CLI::App* forgetful = sub("forgetful", "Projection systems and fibres of a forgetful map", cmd_forgetful);
  forgetful->add_option("--forget", o.forget, "Forgotten labels, e.g. 5,6")->required();
  forgetful->add_option("--model", o.model, "Only this Kapranov model (default: all)");

  CLI::App* fan = sub("fan", "The Losev-Manin fan", cmd_fan);
  fan->add_option("--emit", o.emit, "Extra output")->check(CLI::IsMember({"rays", "cones", "dot", "text"}));

  CLI::App* classify_cmd = sub("classify-p1", "Functionals giving toric morphisms to P^1", cmd_classify);
  classify_cmd->add_option("--bound", o.bound, "Box bound on coefficients and ray values")
      ->check(CLI::Range(1, 6));

  CLI::App* aut = sub("aut-graph", "Boundary intersection graph and its symmetries", cmd_aut_graph);
  aut->add_flag("--count", o.count, "Count graph automorphisms");
  aut->add_option("--emit", o.emit, "Export the graph instead")->check(CLI::IsMember({"dot", "adjacency"}));

  sub("rigidity", "Exact degree solve forcing a linear Cremona", cmd_rigidity);
  sub("verify", "Run the invariant suite for one n", cmd_verify);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = handler(o);
  } catch (const InconsistencyError& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!outcome.report) {
    out << outcome.raw;
    return kExitOk;
  }
  Report& report = *outcome.report;
  if (o.timing) {
    report.timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  if (o.json) {
    report.write_json(out);
  } else {
    report.write_text(out);
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace m0n::cli
