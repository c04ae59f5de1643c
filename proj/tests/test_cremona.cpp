#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "m0n/cremona.hpp"
#include "m0n/errors.hpp"
#include "m0n/sweep.hpp"

using namespace m0n;

namespace {

VitalSpace V(int n, int model, LabelSet span) { return vital_span(KapranovModel(n, model), span); }

// Standard Cremona centred on the points of model i other than p_j: for a
// system of degree d with multiplicities m, the image has multiplicity
// (n-4) d - sum_{g != i, j, h} m_g at p_h and m_j at the new point p_i.
std::map<int, int> cremona_multiplicities(const LinearSystemDescriptor& sys, int j) {
  const int n = sys.model().n();
  const int i = sys.model().omitted();
  std::map<int, int> out;
  for (int h = 1; h <= n; ++h) {
    if (h == i || h == j) continue;
    int value = (n - 4) * sys.degree();
    for (const auto& [g, m] : sys.mults()) {
      if (g != j && g != h) value -= m;
    }
    out[h] = value;
  }
  out[i] = sys.mult(j);
  return out;
}

}  // namespace

TEST(CremonaVital, Examples) {
  EXPECT_EQ(cremona_vital(V(7, 4, {1, 2}), 5), V(7, 5, {3, 6, 7}));
  EXPECT_EQ(cremona_vital(V(7, 4, {1, 2}), 1), V(7, 1, {2, 4}));
  EXPECT_EQ(cremona_vital_closed_form(V(7, 4, {1, 2}), 1), V(7, 1, {2, 4}));
  EXPECT_EQ(cremona_vital_by_boundary(V(7, 4, {1, 2}), 5), V(7, 5, {3, 6, 7}));
  EXPECT_THROW(cremona_vital(V(7, 4, {1, 2}), 4), LabelError);
  EXPECT_THROW(cremona_vital(V(7, 4, {1, 2}), 8), LabelError);
}

TEST(CremonaProperty, RandomRoundTripsAndCocycles) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = gen::uniform(rng, 5, 14);
    const int i = gen::uniform(rng, 1, n);
    const VitalSpace v = gen::random_vital(rng, KapranovModel(n, i));
    int j = i;
    while (j == i) j = gen::uniform(rng, 1, n);
    const VitalSpace w = cremona_vital(v, j);
    EXPECT_EQ(vital_to_boundary(w), vital_to_boundary(v));
    EXPECT_EQ(cremona_vital(w, i), v);
    int k = i;
    while (k == i || k == j) k = gen::uniform(rng, 1, n);
    EXPECT_EQ(cremona_vital(w, k), cremona_vital(v, k));
  }
}

TEST(CremonaSweepTest, CleanForSmallN) {
  for (int n = 4; n <= 8; ++n) {
    const CremonaSweep s = cremona_sweep(n);
    EXPECT_TRUE(s.clean()) << "n=" << n;
    // n models, n-1 targets, one vital space per boundary.
    EXPECT_EQ(s.transports, static_cast<std::uint64_t>(n) * (n - 1) * boundary_count(n));
    EXPECT_EQ(s.cocycle_checks, s.transports * (n - 2));
  }
  EXPECT_THROW(cremona_sweep(3), SizeError);
}

TEST(LinearSystem, Validation) {
  const KapranovModel m(7, 4);
  EXPECT_THROW(LinearSystemDescriptor(m, 1, {{4, 1}}), LabelError);
  EXPECT_THROW(LinearSystemDescriptor(m, 1, {{5, 2}}), PreconditionError);
  EXPECT_THROW(LinearSystemDescriptor(m, 1, {{5, -1}}), PreconditionError);
  EXPECT_THROW(LinearSystemDescriptor(m, 1, {}, {{V(7, 3, {1}), 1}}), ArityError);
  const LinearSystemDescriptor sys(m, 2, {{6, 1}});
  EXPECT_EQ(sys.mult(1), 0);
  EXPECT_EQ(sys.mults().size(), 6u);
}

TEST(TransformDegree, Examples) {
  const LinearSystemDescriptor pencil(KapranovModel(7, 4), 1, {{6, 1}, {7, 1}});
  EXPECT_EQ(transform_degree(pencil, 5), 2);

  for (int n = 5; n <= 12; ++n) {
    EXPECT_EQ(transform_degree(LinearSystemDescriptor(KapranovModel(n, 1), 1, {}), n), n - 3);
  }

  std::map<int, int> ones;
  for (int h = 1; h <= 4; ++h) ones[h] = 1;
  EXPECT_EQ(transform_degree(LinearSystemDescriptor(KapranovModel(6, 6), 2, ones), 5), 2);

  const LinearSystemDescriptor bad(KapranovModel(5, 5), 1, {{1, 1}, {2, 1}, {3, 1}});
  EXPECT_THROW(transform_degree(bad, 4), InconsistencyError);
  EXPECT_THROW(transform_degree(bad, 5), LabelError);
}

TEST(TransformDegree, PencilNormalFormHasDegreeTwo) {
  for (int n = 5; n <= 9; ++n) {
    const LabelSet forgotten = LabelSet::interval(5, n);
    for (int i = 1; i <= 4; ++i) {
      const LinearSystemDescriptor normal = linear_normal_form(KapranovModel(n, i), forgotten);
      for (int j : forgotten.labels()) EXPECT_EQ(transform_degree(normal, j), 2) << n << ' ' << i << ' ' << j;
    }
  }
}

TEST(Phi1Transform, PaperInstance) {
  const QuadricPencilDescriptor q = phi1_transform(7, LabelSet({1, 2, 3, 4}), 4, 5);
  std::set<LabelSet> spans;
  for (int k = 0; k < 3; ++k) spans.insert(q.components[k].span());
  EXPECT_EQ(spans, (std::set<LabelSet>{{3, 6, 7}, {2, 6, 7}, {1, 6, 7}}));
  EXPECT_EQ(q.components[3], V(7, 5, {4, 6, 7}));
  ASSERT_TRUE(q.singular.has_value());
  EXPECT_EQ(*q.singular, V(7, 5, {6, 7}));
  EXPECT_EQ(q.system.degree(), 2);
  EXPECT_EQ(q.model, KapranovModel(7, 5));
}

TEST(Phi1Transform, ComponentwiseOracleAndDegree) {
  for (int n = 5; n <= 9; ++n) {
    const LabelSet remembered{1, 2, 3, 4};
    for (int i : remembered.labels()) {
      for (int j = 5; j <= n; ++j) {
        const QuadricPencilDescriptor q = phi1_transform(n, remembered, i, j);
        EXPECT_EQ(q.system.degree(), 2);
        const KapranovModel src(n, i);
        for (int k = 0; k < 3; ++k) {
          const LabelSet pair = remembered.without(i).without(q.labels[k]);
          EXPECT_EQ(q.components[k], cremona_vital_by_boundary(vital_span(src, pair), j));
        }
        EXPECT_EQ(q.singular.has_value(), n >= 6);
        // Every pair of components meets exactly in the vertex.
        const LabelSet vertex = LabelSet::interval(5, n).without(j);
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) EXPECT_EQ(q.components[a].span() & q.components[b].span(), vertex);
        }
      }
    }
  }
  EXPECT_THROW(phi1_transform(7, LabelSet({1, 2, 3}), 1, 5), PreconditionError);
  EXPECT_THROW(phi1_transform(7, LabelSet({1, 2, 3, 4}), 5, 6), PreconditionError);
  EXPECT_THROW(phi1_transform(7, LabelSet({1, 2, 3, 4}), 1, 2), PreconditionError);
}

// Transport of every linear normal form against the multiplicity oracle, and
// the degree back to the source model.
TEST(TransportNormalForm, MatchesCremonaMultiplicityRule) {
  for (int n = 5; n <= 9; ++n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const LabelSet forgotten = LabelSet::from_mask(mask);
      if (n - forgotten.size() < 4) continue;
      const LabelSet remembered = LabelSet::universe(n) - forgotten;
      for (int i : remembered.labels()) {
        const LinearSystemDescriptor normal = linear_normal_form(KapranovModel(n, i), forgotten);
        for (int j : forgotten.labels()) {
          const LinearSystemDescriptor t = transport_normal_form(normal, j);
          ASSERT_EQ(t.mults(), cremona_multiplicities(normal, j));
          EXPECT_EQ(t.degree(), remembered.size() - 2);
          EXPECT_EQ(transform_degree(t, i), 1);
        }
      }
    }
  }
}

TEST(ClassifyPhiType, Examples) {
  const LinearSystemDescriptor pencil = linear_normal_form(KapranovModel(7, 4), LabelSet({5, 6, 7}));
  const auto linear = classify_phi_type(pencil);
  ASSERT_TRUE(linear.has_value());
  EXPECT_TRUE(linear->is_linear());
  EXPECT_EQ(linear->r, 4);
  EXPECT_EQ(linear->label(), "Phi_1");

  const LinearSystemDescriptor wider = linear_normal_form(KapranovModel(8, 1), LabelSet({7, 8}));
  ASSERT_TRUE(classify_phi_type(wider).has_value());
  EXPECT_EQ(classify_phi_type(wider)->r, 6);
  EXPECT_EQ(classify_phi_type(wider)->label(), "Phi_6");

  const QuadricPencilDescriptor q = phi1_transform(7, LabelSet({1, 2, 3, 4}), 4, 5);
  EXPECT_FALSE(classify_phi_type(q.system).has_value());
  const auto cone = classify_phi_type(q.system, CremonaCertificate{pencil, 5});
  ASSERT_TRUE(cone.has_value());
  EXPECT_FALSE(cone->is_linear());
  EXPECT_EQ(cone->label(), "Phi_1");
  const auto& shape = std::get<ConeShape>(cone->shape);
  EXPECT_EQ(shape.vertex, V(7, 5, {6, 7}));
  EXPECT_EQ(shape.over, (ConicBundle{1, 4}));

  const LinearSystemDescriptor scattered(KapranovModel(7, 4), 3, {{1, 1}, {2, 2}, {6, 1}});
  EXPECT_FALSE(classify_phi_type(scattered).has_value());
  EXPECT_FALSE(classify_phi_type(scattered, CremonaCertificate{pencil, 5}).has_value());

  // A certificate for a different target does not vouch for this system.
  EXPECT_FALSE(classify_phi_type(q.system, CremonaCertificate{pencil, 6}).has_value());
}
