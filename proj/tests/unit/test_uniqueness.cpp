#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_systems.hpp"
#include "toradd/errors.hpp"
#include "toradd/uniqueness.hpp"

using namespace toradd;

namespace {

struct Pipeline {
  RaySystem rs;
  AdditiveStructure s;
  RootCatalog cat;
  PreorderSummary pre;
};

Pipeline run(const std::vector<LatticeVector>& rays) {
  RaySystem rs(rays);
  auto s = detect_additive_structure(rs);
  if (!s) throw NoAdditiveAction();
  auto cat = enumerate_roots(rs, s);
  auto pre = ray_preorder(*s);
  return {std::move(rs), std::move(*s), std::move(cat), std::move(pre)};
}

std::vector<LatticeVector> final_family(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(LatticeVector::unit(n, i));
  std::vector<Integer> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = -static_cast<long>(i + 1);
    b[i] = -static_cast<long>(n - i);
  }
  rays.emplace_back(a);
  rays.emplace_back(b);
  return rays;
}

}  // namespace

TEST(Uniqueness, P2IsNotUnique) {
  const auto p = run({{1, 0}, {0, 1}, {-1, -1}});
  const auto v = uniqueness_verdict(p.s, p.cat, p.pre);
  EXPECT_FALSE(v.unique);
  EXPECT_FALSE(v.cond_roots);
  EXPECT_FALSE(v.cond_positive);
  EXPECT_FALSE(v.cond_preorder);
  ASSERT_TRUE(v.evidence);
  EXPECT_EQ(v.evidence->maximal, 0u);
  EXPECT_EQ(v.evidence->dominated, 1u);
}

TEST(Uniqueness, FinalFamilyIsUnique) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto p = run(final_family(n));
    const auto v = uniqueness_verdict(p.s, p.cat, p.pre);
    EXPECT_TRUE(v.unique) << n;
    EXPECT_TRUE(v.cond_roots && v.cond_positive && v.cond_preorder) << n;
    EXPECT_FALSE(v.evidence);
    EXPECT_EQ(unipotent_dimension(p.cat), n);
    EXPECT_TRUE(dimension_criterion(p.cat, n));
    EXPECT_TRUE(projection_wideness_all_pairs(p.s));
  }
}

TEST(Uniqueness, WeightedProjectiveSpacesAreNotUnique) {
  for (const auto& rays : std::vector<std::vector<LatticeVector>>{
           {{1, 0}, {0, 1}, {-1, -2}},
           {{1, 0}, {0, 1}, {-2, -3}},
           {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}}}) {
    const auto p = run(rays);
    EXPECT_FALSE(uniqueness_verdict(p.s, p.cat, p.pre).unique);
  }
}

TEST(Uniqueness, Wp112Evidence) {
  const auto p = run({{1, 0}, {0, 1}, {-1, -2}});
  const auto pair = select_dominance_pair(p.s, p.pre);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->maximal, 1u);
  EXPECT_EQ(pair->dominated, 0u);
}

TEST(Uniqueness, NoStructureThrows) {
  const RaySystem five({{1, 0}, {0, 1}, {-1, 1}, {-2, -1}, {-1, -1}});
  EXPECT_THROW(uniqueness_verdict(detect_additive_structure(five), enumerate_roots(five)),
               NoAdditiveAction);
}

TEST(DimensionCriterion, Examples) {
  const auto p2 = run({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_FALSE(dimension_criterion(p2.cat, 2));
  const auto f2 = run(final_family(2));
  EXPECT_TRUE(dimension_criterion(f2.cat, 2));
  const auto w = run({{1, 0}, {0, 1}, {-1, -2}});
  EXPECT_FALSE(dimension_criterion(w.cat, 2));
}

TEST(Wideness, SurfaceExamples) {
  EXPECT_TRUE(surface_wideness(run(final_family(2)).s));
  EXPECT_FALSE(surface_wideness(run({{1, 0}, {0, 1}, {-1, -1}}).s));
  EXPECT_FALSE(surface_wideness(run({{1, 0}, {0, 1}, {-1, -2}}).s));
  EXPECT_THROW(surface_wideness(run(final_family(3)).s), DimensionError);
}

TEST(Wideness, ProjectionExamples) {
  EXPECT_TRUE(projection_wideness_all_pairs(run(final_family(3)).s));
  EXPECT_FALSE(projection_wideness_all_pairs(
      run({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}).s));
  EXPECT_FALSE(projection_wideness_all_pairs(run({{1, 0}, {0, 1}, {-1, -2}}).s));
}

// The three characterizations of uniqueness, the dimension count, and the
// wideness tests must agree on every structured system.
TEST(Uniqueness, SelfTestOnRandomSystems) {
  std::mt19937_64 rng(1000);
  int unique = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto sample = test::random_structured(rng);
    const auto p = run(sample.rays);
    UniquenessVerdict v;
    ASSERT_NO_THROW(v = uniqueness_verdict(p.s, p.cat, p.pre)) << "trial " << trial;
    EXPECT_EQ(v.cond_roots, v.cond_positive);
    EXPECT_EQ(v.cond_positive, v.cond_preorder);
    EXPECT_EQ(dimension_criterion(p.cat, p.s.dim()), v.unique) << "trial " << trial;
    EXPECT_EQ(projection_wideness_all_pairs(p.s), p.pre.trivial) << "trial " << trial;
    if (p.s.dim() == 2) { EXPECT_EQ(surface_wideness(p.s), v.unique) << "trial " << trial; }
    EXPECT_EQ(v.evidence.has_value(), !v.unique);
    unique += v.unique;
  }
  EXPECT_GT(unique, 50);
  EXPECT_LT(unique, 950);
}
