#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_systems.hpp"
#include "toradd/errors.hpp"
#include "toradd/roots.hpp"

using namespace toradd;

namespace {

using Set = std::vector<LatticeVector>;

Set sorted(Set s) {
  std::sort(s.begin(), s.end());
  return s;
}

Set vectors_of(const std::vector<DemazureRoot>& roots) {
  Set out;
  for (const auto& r : roots) out.push_back(r.vector);
  return sorted(out);
}

long widest(const RootSets& sets) {
  long w = 0;
  for (const auto& s : sets) {
    for (const auto& e : s) w = std::max(w, e.max_norm().get_si());
  }
  return w;
}

const RaySystem kP2({{1, 0}, {0, 1}, {-1, -1}});
const RaySystem kWp112({{1, 0}, {0, 1}, {-1, -2}});
const RaySystem kFive({{1, 0}, {0, 1}, {-1, 1}, {-2, -1}, {-1, -1}});
const RaySystem kFinal2({{1, 0}, {0, 1}, {-1, -2}, {-2, -1}});

}  // namespace

TEST(EnumerateRoots, P2) {
  const auto c = enumerate_roots(kP2, detect_additive_structure(kP2));
  // p1* = (1,0), p2* = (0,1)
  EXPECT_EQ(c.per_ray[0], sorted({{-1, 0}, {-1, 1}}));
  EXPECT_EQ(c.per_ray[1], sorted({{0, -1}, {1, -1}}));
  EXPECT_EQ(c.per_ray[2], sorted({{1, 0}, {0, 1}}));
  EXPECT_EQ(c.semisimple.size(), 6u);
  EXPECT_TRUE(c.unipotent.empty());
  EXPECT_EQ(unipotent_dimension(c), 3u);
}

TEST(EnumerateRoots, FiveRayWithoutStructure) {
  const auto c = enumerate_roots(kFive);
  EXPECT_EQ(c.per_ray[0], sorted({{-1, 0}, {-1, 1}}));
  for (std::size_t i = 1; i < 5; ++i) EXPECT_TRUE(c.per_ray[i].empty());
  EXPECT_EQ(unipotent_dimension(c), 2u);
  EXPECT_FALSE(c.u);
}

TEST(EnumerateRoots, Wp112) {
  const auto c = enumerate_roots(kWp112, detect_additive_structure(kWp112));
  EXPECT_EQ(c.per_ray[0], (Set{{-1, 0}}));
  EXPECT_EQ(c.per_ray[1], sorted({{0, -1}, {1, -1}, {2, -1}}));
  EXPECT_EQ(c.per_ray[2], (Set{{1, 0}}));
  EXPECT_EQ(vectors_of(c.semisimple), sorted({{-1, 0}, {1, 0}}));
  EXPECT_EQ(unipotent_dimension(c), 4u);
}

TEST(EnumerateRoots, RejectsNonSpanning) {
  EXPECT_THROW(enumerate_roots(RaySystem({{1, 0}, {0, 1}, {-1, 0}})), InputError);
  EXPECT_THROW(roots_by_elimination(RaySystem({{1, 0}, {0, 1}, {-1, 0}})), InputError);
}

TEST(BruteForceRoots, Examples) {
  const auto dfs = enumerate_roots(kP2, detect_additive_structure(kP2)).per_ray;
  EXPECT_EQ(brute_force_roots(kP2, 3), dfs);

  const auto p1 = brute_force_roots(RaySystem({{1}, {-1}}), 2);
  EXPECT_EQ(p1[0], (Set{{-1}}));
  EXPECT_EQ(p1[1], (Set{{1}}));

  const auto f = brute_force_roots(kFinal2, 4);
  EXPECT_EQ(f[0], (Set{{-1, 0}}));
  EXPECT_EQ(f[1], (Set{{0, -1}}));
  EXPECT_TRUE(f[2].empty());
  EXPECT_TRUE(f[3].empty());
}

TEST(PositiveSystem, Examples) {
  const auto c2 = enumerate_roots(kP2, detect_additive_structure(kP2));
  ASSERT_TRUE(c2.u);
  EXPECT_EQ(*c2.u, (LatticeVector{-1, -2}));
  // <u, e> > 0 picks -p1*, -p2* and p1* - p2*.
  EXPECT_EQ(vectors_of(c2.positive), sorted({{-1, 0}, {0, -1}, {1, -1}}));

  const auto cw = enumerate_roots(kWp112, detect_additive_structure(kWp112));
  EXPECT_EQ(*cw.u, (LatticeVector{-1, -2}));
  EXPECT_EQ(vectors_of(cw.positive), sorted({{-1, 0}, {0, -1}, {1, -1}, {2, -1}}));

  const auto cf = enumerate_roots(kFinal2, detect_additive_structure(kFinal2));
  EXPECT_TRUE(cf.semisimple.empty());
  EXPECT_EQ(vectors_of(cf.positive), sorted({{-1, 0}, {0, -1}}));
}

TEST(CompleteCollections, Examples) {
  const auto c2 = complete_collections(kP2, enumerate_roots(kP2));
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2[0].basis_indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c2[1].basis_indices, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(c2[2].basis_indices, (std::vector<std::size_t>{1, 2}));

  EXPECT_TRUE(complete_collections(kFive, enumerate_roots(kFive)).empty());

  // {p2, p3} is a basis with p1 = -2 p2 - p3, so P(1,1,2) has two
  // collections; the subset scan below agrees.
  const auto cw = complete_collections(kWp112, enumerate_roots(kWp112));
  ASSERT_EQ(cw.size(), 2u);
  EXPECT_EQ(cw[1].basis_indices, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(cw[1].roots, (Set{{2, -1}, {1, 0}}));
}

TEST(CompleteCollections, CountsMatchSubsetScan) {
  for (const auto& name : test::fixture_names()) {
    const FanFile ff = test::load_fixture(name);
    const RaySystem rs(ff.rays);
    const auto cc = complete_collections(rs, enumerate_roots(rs));
    std::vector<std::vector<std::size_t>> got;
    for (const auto& c : cc) got.push_back(c.basis_indices);
    EXPECT_EQ(got, test::collections_by_subset_scan(ff.rays)) << name;
  }
}

TEST(CompleteCollections, EachRootIsMinusDual) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = test::random_structured(rng);
    const RaySystem rs(sample.rays);
    const auto cat = enumerate_roots(rs);
    for (const auto& cc : complete_collections(rs, cat)) {
      for (std::size_t j = 0; j < cc.roots.size(); ++j) {
        EXPECT_EQ(pairing(rs[cc.basis_indices[j]], cc.roots[j]), -1);
        for (std::size_t k = 0; k < cc.roots.size(); ++k) {
          if (k != j) { EXPECT_EQ(pairing(rs[cc.basis_indices[k]], cc.roots[j]), 0); }
        }
        EXPECT_EQ(cat.ray_of(cc.roots[j]), cc.basis_indices[j]);
      }
    }
  }
}

// Three independent computations of the root sets must coincide: search in
// dual-basis coordinates, Fourier-Motzkin bounds, and a box scan whose
// radius exceeds the largest root coordinate by 2.
TEST(EnumerateRoots, ThreeWayAgreementOnRandomSystems) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sample = test::random_structured(rng);
    const RaySystem rs(sample.rays);
    const auto s = detect_additive_structure(rs);
    ASSERT_TRUE(s);
    const RootSets dfs = roots_in_basis(rs, *s);
    const RootSets fm = roots_by_elimination(rs);
    ASSERT_EQ(dfs, fm) << "trial " << trial;
    const long radius = widest(dfs) + 2;
    if (radius > 12 || rs.dim() > 3) {
      // Keep the naive scan affordable; the library scan covers the rest.
      EXPECT_EQ(brute_force_roots(rs, static_cast<unsigned>(radius)), dfs) << "trial " << trial;
      continue;
    }
    EXPECT_EQ(test::roots_by_box_scan(sample.rays, radius), dfs) << "trial " << trial;
  }
}

TEST(EnumerateRoots, FixturesMatchBoxScan) {
  for (const auto& name : test::fixture_names()) {
    const FanFile ff = test::load_fixture(name);
    const RaySystem rs(ff.rays);
    const auto cat = enumerate_roots(rs, detect_additive_structure(rs));
    const long radius = widest(cat.per_ray) + 2;
    EXPECT_EQ(cat.per_ray, roots_by_elimination(rs)) << name;
    EXPECT_EQ(cat.per_ray, brute_force_roots(rs, static_cast<unsigned>(radius))) << name;
    if (rs.dim() <= 3) { EXPECT_EQ(cat.per_ray, test::roots_by_box_scan(ff.rays, radius)) << name; }
  }
}

TEST(RootInvariants, HoldOnRandomSystems) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sample = test::random_structured(rng);
    const RaySystem rs(sample.rays);
    const auto s = detect_additive_structure(rs);
    const auto cat = enumerate_roots(rs, s);
    const auto bad = root_invariant_violations(rs, *s, cat);
    EXPECT_TRUE(bad.empty()) << "trial " << trial << ": " << bad.front();
    EXPECT_EQ(cat.semisimple.size() % 2, 0u);
    ASSERT_TRUE(cat.u);
    EXPECT_TRUE(is_valid_regularizer(cat, *s, *cat.u));
    for (const auto& r : cat.semisimple) EXPECT_NE(pairing(*cat.u, r.vector), 0);
    EXPECT_EQ(cat.positive.size(), unipotent_dimension(cat));
  }
}

TEST(RootInvariants, NegationDecidesKind) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = test::random_structured(rng);
    const RaySystem rs(sample.rays);
    const auto cat = enumerate_roots(rs);
    for (const auto& r : cat.semisimple) EXPECT_TRUE(cat.contains(-r.vector));
    for (const auto& r : cat.unipotent) EXPECT_FALSE(cat.contains(-r.vector));
  }
}

TEST(EnumerateRoots, InvariantUnderRayPermutation) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = test::random_structured(rng);
    std::vector<std::size_t> perm(sample.rays.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LatticeVector> permuted(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[perm[i]] = sample.rays[i];
    const auto a = enumerate_roots(RaySystem(sample.rays));
    const auto b = enumerate_roots(RaySystem(permuted));
    for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_EQ(a.per_ray[i], b.per_ray[perm[i]]);
    EXPECT_EQ(unipotent_dimension(a), unipotent_dimension(b));
  }
}
