#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "m0n/errors.hpp"
#include "m0n/toric.hpp"

using namespace m0n;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Oracle: maximal chains of proper nonempty subsets of an m-set, counted
// by extending chains one element at a time.
std::uint64_t maximal_chains(int m) {
  std::vector<std::uint64_t> ways(std::size_t{1} << m, 0);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (int b = 0; b < m; ++b) ways[std::uint64_t{1} << b] = 1;
  std::uint64_t total = 0;
  for (std::uint64_t s = 1; s < full; ++s) {
    if (ways[s] == 0) continue;
    if (std::popcount(s) == m - 1) total += ways[s];
    for (int b = 0; b < m; ++b) {
      const std::uint64_t t = s | (std::uint64_t{1} << b);
      if (t != s && t != full) ways[t] += ways[s];
    }
  }
  return total;
}

// Oracle for the classification: value vectors on the undivided rays that
// sum to zero, pass the subset-pair test and are normalized; counted directly.
std::set<IntVector> subset_route_classes(int n, int bound) {
  const int m = n - 2;
  std::set<IntVector> out;
  IntVector values(m);
  const int side = 2 * bound + 1;
  std::int64_t total = 1;
  for (int k = 0; k < m; ++k) total *= side;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    std::int64_t sum = 0;
    bool nonzero = false;
    for (int k = 0; k < m; ++k) {
      values[k] = c % side - bound;
      c /= side;
      sum += values[k];
      nonzero = nonzero || values[k] != 0;
    }
    if (sum != 0 || !nonzero) continue;
    if (!halfline_condition_by_subsets(values)) continue;
    // Every subset sum is a ray value of the subdivided fan.
    bool bounded = true;
    for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << m); ++s) {
      std::int64_t v = 0;
      for (int k = 0; k < m; ++k) {
        if ((s >> k) & 1) v += values[k];
      }
      bounded = bounded && v >= -bound && v <= bound;
    }
    if (!bounded) continue;
    IntVector norm = values;
    std::int64_t g = 0;
    for (std::int64_t x : norm) g = std::gcd(g, x < 0 ? -x : x);
    for (std::int64_t& x : norm) x /= g;
    const auto first = std::find_if(norm.begin(), norm.end(), [](std::int64_t x) { return x != 0; });
    if (*first < 0) {
      for (std::int64_t& x : norm) x = -x;
    }
    out.insert(norm);
  }
  return out;
}

}  // namespace

TEST(ProjectiveFan, Examples) {
  EXPECT_EQ(projective_fan(1).rays().size(), 2u);
  EXPECT_EQ(projective_fan(2).rays().size(), 3u);
  EXPECT_EQ(projective_fan(2).cones().size(), 3u);
  EXPECT_EQ(projective_fan(4).rays().size(), 5u);
  EXPECT_EQ(projective_fan(4).cones().size(), 5u);
  for (int dim = 1; dim <= 6; ++dim) EXPECT_TRUE(check_fan(projective_fan(dim)).ok()) << dim;
  EXPECT_THROW(projective_fan(0), PreconditionError);
}

TEST(BarycentricSubdivision, Hexagon) {
  const Fan hex = barycentric_subdivision(projective_fan(2));
  EXPECT_EQ(hex.rays().size(), 6u);
  EXPECT_EQ(hex.cones().size(), 6u);
  EXPECT_TRUE(check_fan(hex).ok());
  // Original rays come first.
  EXPECT_EQ(hex.rays()[0], (IntVector{1, 0}));
  EXPECT_EQ(hex.rays()[1], (IntVector{0, 1}));
  EXPECT_EQ(hex.rays()[2], (IntVector{-1, -1}));
}

TEST(LosevManinFan, CountsAgainstChainOracle) {
  for (int n = 5; n <= 8; ++n) {
    const Fan fan = losev_manin_fan(n);
    EXPECT_EQ(fan.dim(), n - 3);
    EXPECT_EQ(fan.rays().size(), (std::size_t{1} << (n - 2)) - 2) << n;
    EXPECT_EQ(fan.cones().size(), maximal_chains(n - 2)) << n;
    EXPECT_EQ(fan.cones().size(), factorial(n - 2)) << n;
    const FanCheck c = check_fan(fan);
    EXPECT_TRUE(c.ok()) << c.detail;
  }
  EXPECT_EQ(losev_manin_fan(7).rays().size(), 30u);
  EXPECT_EQ(losev_manin_fan(7).cones().size(), 120u);
  EXPECT_THROW(losev_manin_fan(4), PreconditionError);
  EXPECT_THROW(losev_manin_fan(kMaxFanMarkings + 1), SizeError);
}

TEST(CheckFan, DetectsDefects) {
  const Fan hex = barycentric_subdivision(projective_fan(2));
  std::vector<std::vector<int>> fewer(hex.cones().begin() + 1, hex.cones().end());
  const FanCheck missing = check_fan(Fan(2, hex.rays(), fewer));
  EXPECT_FALSE(missing.complete);
  EXPECT_FALSE(missing.detail.empty());

  const FanCheck fat = check_fan(Fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_FALSE(fat.primitive);

  const FanCheck flat = check_fan(Fan(2, {{1, 0}, {2, 1}, {-1, 0}}, {{0, 1, 2}}));
  EXPECT_FALSE(flat.simplicial);
  EXPECT_THROW(barycentric_subdivision(Fan(2, {{1, 0}, {2, 1}, {-1, 0}}, {{0, 1, 2}})), NotSimplicialError);

  // Two cones on one side of the shared facet: not a complete fan.
  const FanCheck folded = check_fan(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_FALSE(folded.complete);
  EXPECT_THROW(barycentric_subdivision(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}, {1, 2}})),
               PreconditionError);

  EXPECT_THROW(Fan(2, {{1, 0, 0}}, {}), PreconditionError);
  EXPECT_THROW(Fan(2, {{1, 0}}, {{0, 1}}), PreconditionError);
}

TEST(FanExport, TextAndDot) {
  const std::string text = fan_to_text(projective_fan(2));
  EXPECT_EQ(text, "dim 2\nrays 3\n0: 1 0\n1: 0 1\n2: -1 -1\ncones 3\n0: 0 1\n1: 0 2\n2: 1 2\n");
  const std::string dot = fan_to_dot(projective_fan(2), "p2");
  EXPECT_NE(dot.find("graph p2 {"), std::string::npos);
  EXPECT_NE(dot.find("r0 -- r1"), std::string::npos);
}

TEST(ConeHalflineFunctionals, Examples) {
  EXPECT_EQ(cone_halfline_functionals(losev_manin_fan(5), 2).size(), 3u);
  EXPECT_TRUE(cone_halfline_functionals(projective_fan(2), 2).empty());
  EXPECT_EQ(cone_halfline_functionals(losev_manin_fan(6), 2).size(), 6u);
  EXPECT_EQ(cone_halfline_functionals(losev_manin_fan(7), 2).size(), 10u);
  EXPECT_THROW(cone_halfline_functionals(projective_fan(2), 0), PreconditionError);
}

TEST(ConeHalflineFunctionals, AgreesWithSubsetRoute) {
  for (int n = 5; n <= 7; ++n) {
    for (int bound = 1; bound <= 3; ++bound) {
      std::set<IntVector> scanned;
      for (const FanFunctional& g : cone_halfline_functionals(losev_manin_fan(n), bound)) {
        scanned.insert(undivided_values(g));
      }
      EXPECT_EQ(scanned, subset_route_classes(n, bound)) << "n=" << n << " B=" << bound;
    }
  }
}

TEST(FunctionalToForgetful, Examples) {
  EXPECT_EQ(functional_to_forgetful(FanFunctional{{1, 0}}, 5), std::make_pair(1, 3));
  EXPECT_EQ(undivided_values(FanFunctional{{1, 0}}), (IntVector{1, 0, -1}));
  EXPECT_EQ(functional_to_forgetful(FanFunctional{{1, -1}}, 5), std::make_pair(1, 2));
  EXPECT_EQ(functional_to_forgetful(FanFunctional{{-1, 1}}, 5), std::make_pair(1, 2));
  EXPECT_THROW(functional_to_forgetful(FanFunctional{{1, 1}}, 5), ShapeViolation);
  EXPECT_THROW(functional_to_forgetful(FanFunctional{{1, 0}}, 6), PreconditionError);
  EXPECT_THROW(functional_to_forgetful(FanFunctional{{2, -1, 0}}, 6), ShapeViolation);
}

TEST(ToricProperty, ConeScanMatchesSubsetPairScan) {
  gen::Rng rng(47);
  for (int n = 5; n <= 8; ++n) {
    const Fan fan = losev_manin_fan(n);
    for (int trial = 0; trial < 400; ++trial) {
      FanFunctional g{IntVector(fan.dim())};
      for (std::int64_t& c : g.coeffs) c = gen::uniform(rng, -3, 3);
      // Bias towards sparse functionals, which are the interesting ones.
      if (trial % 2 == 0) {
        for (std::int64_t& c : g.coeffs) {
          if (gen::uniform(rng, 0, 2) != 0) c = 0;
        }
      }
      EXPECT_EQ(maps_cones_to_halflines(fan, g), halfline_condition_by_subsets(undivided_values(g)))
          << to_string(g);
    }
  }
}

TEST(ToricProperty, SolutionsHaveSupportTwo) {
  for (int n = 5; n <= 7; ++n) {
    std::set<std::pair<int, int>> pairs;
    for (const FanFunctional& g : cone_halfline_functionals(losev_manin_fan(n), 2)) {
      const auto [a, b] = functional_to_forgetful(g, n);
      EXPECT_LT(a, b);
      const IntVector values = undivided_values(g);
      EXPECT_EQ(values[a - 1], -values[b - 1]);
      pairs.emplace(a, b);
      FanFunctional neg = g;
      for (std::int64_t& c : neg.coeffs) c = -c;
      EXPECT_EQ(functional_to_forgetful(neg, n), std::make_pair(a, b));
    }
    EXPECT_EQ(pairs.size(), static_cast<std::size_t>((n - 2) * (n - 3) / 2));
  }
}

TEST(NormalizeFunctional, ScalesAndSigns) {
  const Fan fan = losev_manin_fan(5);
  EXPECT_EQ(normalize_functional(fan, {-2, 2}), normalize_functional(fan, {1, -1}));
  EXPECT_EQ(normalize_functional(fan, {-3, 0}).coeffs, (IntVector{1, 0}));
}
