#include <gtest/gtest.h>

#include "generators.hpp"
#include "m0n/errors.hpp"
#include "m0n/forgetful.hpp"

using namespace m0n;

namespace {

// Random map out of `domain`: forgets up to |domain|-4 labels and renames the
// rest injectively into {1..max_label}.
ForgetfulMap random_map(gen::Rng& rng, LabelSet domain, int max_label) {
  const LabelSet forgotten = gen::random_subset(rng, domain, 0, domain.size() - 4);
  const std::vector<int> kept = (domain - forgotten).labels();
  std::vector<int> targets = LabelSet::universe(max_label).labels();
  std::shuffle(targets.begin(), targets.end(), rng);
  std::map<int, int> relabel;
  for (std::size_t k = 0; k < kept.size(); ++k) relabel[kept[k]] = targets[k];
  return ForgetfulMap(domain, forgotten, relabel);
}

// Naive tracing oracle: where does each label of the first domain end up?
std::map<int, std::optional<int>> trace(const std::vector<ForgetfulMap>& chain) {
  std::map<int, std::optional<int>> out;
  for (int l : chain.front().domain().labels()) {
    std::optional<int> at = l;
    for (const ForgetfulMap& f : chain) {
      if (!at) break;
      at = f.apply(*at);
    }
    out[l] = at;
  }
  return out;
}

std::map<int, std::optional<int>> trace(const ForgetfulMap& f) { return trace(std::vector<ForgetfulMap>{f}); }

}  // namespace

TEST(ForgetfulMap, Construction) {
  const ForgetfulMap f = ForgetfulMap::forget(7, LabelSet({5, 6}));
  EXPECT_EQ(f.remembered(), LabelSet({1, 2, 3, 4, 7}));
  EXPECT_EQ(f.codomain(), f.remembered());
  EXPECT_EQ(f.target_markings(), 5);
  EXPECT_EQ(f.apply(7), 7);
  EXPECT_EQ(f.apply(5), std::nullopt);
  EXPECT_EQ(to_string(f), "phi_{5,6}");
  EXPECT_THROW(ForgetfulMap::forget(7, LabelSet({4, 5, 6, 7})), SizeError);
  EXPECT_THROW(ForgetfulMap::forget(7, LabelSet({8})), LabelError);
  EXPECT_THROW(ForgetfulMap(LabelSet::universe(5), LabelSet({5}), {{1, 2}}), LabelError);
  EXPECT_THROW(ForgetfulMap(LabelSet::universe(5), LabelSet({5}), {{5, 1}}), LabelError);
}

TEST(ComposeForgetful, Examples) {
  const ForgetfulMap inner = ForgetfulMap::forget(7, LabelSet({5}));
  const ForgetfulMap outer(inner.codomain(), LabelSet({6}));
  EXPECT_EQ(compose_forgetful(outer, inner), ForgetfulMap::forget(7, LabelSet({5, 6})));

  // phi_I = phi_2 o phi_{I \ {2}} for I = {2,5,6}, n = 8.
  const ForgetfulMap first = ForgetfulMap::forget(8, LabelSet({5, 6}));
  const ForgetfulMap second(first.codomain(), LabelSet({2}));
  EXPECT_EQ(compose_forgetful(second, first), ForgetfulMap::forget(8, LabelSet({2, 5, 6})));

  // Identity relabel after a transposition relabel keeps the transposition.
  const ForgetfulMap swap(LabelSet::universe(6), LabelSet({6}), {{1, 2}, {2, 1}});
  const ForgetfulMap plain(swap.codomain(), LabelSet{});
  const ForgetfulMap composed = compose_forgetful(plain, swap);
  EXPECT_EQ(composed, swap);
  EXPECT_EQ(composed.apply(1), 2);

  // A renamed inner map can make the outer one forget a different original label.
  const ForgetfulMap shift(LabelSet::universe(6), LabelSet({6}), {{1, 2}, {2, 1}});
  const ForgetfulMap drop_one(shift.codomain(), LabelSet({1}));
  EXPECT_EQ(compose_forgetful(drop_one, shift).forgotten(), LabelSet({2, 6}));
  EXPECT_EQ(compose_forgetful(drop_one, shift).apply(1), 2);

  EXPECT_THROW(compose_forgetful(ForgetfulMap::forget(7, LabelSet{}), inner), ArityError);
}

TEST(ForgetfulProperty, CompositionMatchesTracingAndIsAssociative) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = gen::uniform(rng, 6, 8);
    const ForgetfulMap f = random_map(rng, LabelSet::universe(n), n);
    const ForgetfulMap g = random_map(rng, f.codomain(), n);
    const ForgetfulMap h = random_map(rng, g.codomain(), n);
    const ForgetfulMap gf = compose_forgetful(g, f);
    const ForgetfulMap hgf = compose_forgetful(h, gf);
    EXPECT_EQ(trace(gf), trace({f, g}));
    EXPECT_EQ(trace(hgf), trace({f, g, h}));
    EXPECT_EQ(hgf, compose_forgetful(compose_forgetful(h, g), f));
    EXPECT_EQ(hgf.codomain(), h.codomain());
  }
}

TEST(ProjectionSystem, Examples) {
  const ForgetfulMap f = ForgetfulMap::forget(7, LabelSet({5, 6, 7}));
  const ProjectionSystem linear = projection_system(f, 1);
  EXPECT_EQ(linear.system.degree(), 1);
  ASSERT_EQ(linear.system.base().size(), 1u);
  EXPECT_EQ(linear.system.base().front().space, vital_span(KapranovModel(7, 1), LabelSet({5, 6, 7})));
  ASSERT_TRUE(linear.type.has_value());
  EXPECT_TRUE(linear.type->is_linear());
  EXPECT_FALSE(linear.certificate.has_value());

  const ProjectionSystem cone = projection_system(f, 5);
  EXPECT_EQ(cone.system.degree(), 2);
  ASSERT_TRUE(cone.type.has_value());
  EXPECT_FALSE(cone.type->is_linear());
  EXPECT_EQ(cone.type->label(), "Phi_1");
  ASSERT_TRUE(cone.certificate.has_value());

  const ProjectionSystem conics = projection_system(ForgetfulMap::forget(5, LabelSet({5})), 5);
  EXPECT_EQ(conics.system.degree(), 2);
  const auto& shape = std::get<ConeShape>(conics.type->shape);
  EXPECT_FALSE(shape.vertex.has_value());
  EXPECT_EQ(shape.over, (ConicBundle{1, 1}));
  for (int h = 1; h <= 4; ++h) EXPECT_EQ(conics.system.mult(h), 1);

  const ProjectionSystem identity = projection_system(ForgetfulMap::forget(6, LabelSet{}), 3);
  EXPECT_FALSE(identity.type.has_value());
  EXPECT_EQ(identity.system.degree(), 1);

  EXPECT_THROW(projection_system(f, 8), LabelError);
  const ForgetfulMap renamed(LabelSet({2, 3, 4, 5, 6}), LabelSet({6}));
  EXPECT_THROW(projection_system(renamed, 2), PreconditionError);
}

TEST(FiberDescriptor, Examples) {
  const ForgetfulMap f = ForgetfulMap::forget(7, LabelSet({5, 6, 7}));
  const FiberDescriptor cone = fiber_descriptor(f, 5);
  ASSERT_TRUE(std::holds_alternative<ConeFiber>(cone));
  EXPECT_EQ(std::get<ConeFiber>(cone).vertex, vital_span(KapranovModel(7, 5), LabelSet({6, 7})));
  EXPECT_EQ(std::get<ConeFiber>(cone).curve_degree, 2);

  const FiberDescriptor linear = fiber_descriptor(f, 1);
  ASSERT_TRUE(std::holds_alternative<LinearFiber>(linear));
  EXPECT_EQ(std::get<LinearFiber>(linear).codim, 3);

  const FiberDescriptor curve = fiber_descriptor(ForgetfulMap::forget(6, LabelSet({6})), 6);
  ASSERT_TRUE(std::holds_alternative<ConeFiber>(curve));
  EXPECT_FALSE(std::get<ConeFiber>(curve).vertex.has_value());
  EXPECT_EQ(std::get<ConeFiber>(curve).curve_degree, 3);
  EXPECT_EQ(to_string(curve), "cone vertex {} over rational normal curve of degree 3");
}

TEST(ForgetfulProperty, DegreesAndFibersForAllMaps) {
  for (int n = 5; n <= 9; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const LabelSet forgotten = LabelSet::from_mask(mask);
      if (n - forgotten.size() < 4) continue;
      const ForgetfulMap f = ForgetfulMap::forget(n, forgotten);
      for (int j = 1; j <= n; ++j) {
        const ProjectionSystem p = projection_system(f, j);
        const FiberDescriptor d = fiber_descriptor(f, j);
        if (forgotten.contains(j)) {
          ASSERT_EQ(p.system.degree(), n - forgotten.size() - 2);
          ASSERT_TRUE(std::holds_alternative<ConeFiber>(d));
          EXPECT_EQ(std::get<ConeFiber>(d).curve_degree + forgotten.size(), n - 2);
          EXPECT_EQ(factor_through(p.system), forgotten.without(j));
        } else {
          ASSERT_EQ(p.system.degree(), 1);
          ASSERT_TRUE(std::holds_alternative<LinearFiber>(d));
          EXPECT_EQ(std::get<LinearFiber>(d).codim, forgotten.size());
          EXPECT_EQ(factor_through(p.system), forgotten);
        }
      }
    }
  }
}

TEST(SectionDivisor, Examples) {
  EXPECT_EQ(section_divisor(1, 5, 6).rep(), LabelSet({1, 5}));
  EXPECT_EQ(section_divisor(2, 3, 5).rep(), LabelSet({1, 4, 5}));
  EXPECT_THROW(section_divisor(2, 2, 5), LabelError);
  for (int n = 4; n <= 9; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(boundary_image(KapranovModel(n, i), section_divisor(i, j, n)), vital_span(KapranovModel(n, i), LabelSet({j})));
      }
    }
  }
}

TEST(FactorThrough, Examples) {
  const LinearSystemDescriptor plane(KapranovModel(7, 1), 1, {{5, 1}, {6, 1}, {7, 1}},
                                     {{vital_span(KapranovModel(7, 1), LabelSet({5, 6, 7})), 1}});
  EXPECT_EQ(factor_through(plane), LabelSet({5, 6, 7}));

  const LinearSystemDescriptor conics(KapranovModel(6, 6), 2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
  EXPECT_EQ(factor_through(conics), LabelSet{});

  for (int n = 7; n <= 9; ++n) {
    const QuadricPencilDescriptor q = phi1_transform(n, LabelSet({1, 2, 3, 4}), 1, 5);
    EXPECT_EQ(factor_through(q.system), LabelSet::interval(6, n));
  }
}
