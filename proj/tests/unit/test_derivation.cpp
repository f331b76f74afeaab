#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_systems.hpp"
#include "toradd/derivation.hpp"
#include "toradd/errors.hpp"

using namespace toradd;

namespace {

Polynomial x(std::size_t m, std::size_t i) { return Polynomial::variable(m, i); }

// c * x^exps * d/dx_target
Derivation term(std::vector<unsigned> exps, std::size_t target, Rational c = 1) {
  return Derivation::single(Monomial(std::move(exps)), target, std::move(c));
}

const RaySystem kP2({{1, 0}, {0, 1}, {-1, -1}});
const RaySystem kWp112({{1, 0}, {0, 1}, {-1, -2}});

// x3 d1 + x1^2 d2 on P(1,1,2)
Derivation wp112_nna_slot() { return term({0, 0, 1}, 0) + term({2, 0, 0}, 1); }

}  // namespace

TEST(Derivation, ApplyExamples) {
  const Derivation d = term({0, 0, 1}, 0);
  EXPECT_EQ(d.apply(x(3, 0)), x(3, 2));
  EXPECT_EQ(d.apply(x(3, 0) * x(3, 0) * x(3, 1)), Rational(2) * x(3, 0) * x(3, 1) * x(3, 2));
  EXPECT_EQ(term({0, 0, 2}, 1).apply(x(3, 1)), x(3, 2) * x(3, 2));
  EXPECT_EQ(d.to_string(), "x3*d/dx1");
  EXPECT_EQ(wp112_nna_slot().to_string(), "x3*d/dx1 + x1^2*d/dx2");
}

TEST(Derivation, RootDerivations) {
  EXPECT_EQ(root_derivation(kP2, {-1, 0}), term({0, 0, 1}, 0));
  EXPECT_EQ(root_derivation(kP2, {-1, 1}), term({0, 1, 0}, 0));
  EXPECT_EQ(root_derivation(kWp112, {2, -1}), term({2, 0, 0}, 1));
  EXPECT_THROW(root_derivation(kP2, {1, 1}), InputError);
}

TEST(Derivation, RootDerivationsHaveClassDegreeZero) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = test::random_structured(rng);
    const RaySystem rs(sample.rays);
    const auto s = detect_additive_structure(rs);
    const DegreeMap dm = degree_map(*s);
    for (const auto& set : enumerate_roots(rs, s).per_ray) {
      for (const auto& e : set) {
        const Derivation d = root_derivation(rs, e, dm);
        EXPECT_EQ(d.terms().size(), 1u);
        EXPECT_EQ(d.class_degree(dm), dm.zero());
      }
    }
  }
}

TEST(Commutator, Examples) {
  EXPECT_TRUE(commutator(term({0, 0, 1}, 0), term({0, 0, 1}, 1)).is_zero());
  EXPECT_EQ(commutator(term({0, 0, 0}, 0), term({1, 0, 0}, 1)), term({0, 0, 0}, 1));
  EXPECT_TRUE(commutator(wp112_nna_slot(), term({0, 0, 2}, 1)).is_zero());
  EXPECT_EQ(commutator(term({0, 0, 1}, 0), term({1, 0, 0}, 1)), term({0, 0, 1}, 1));
}

TEST(Commutator, MatchesDefinitionOnPolynomials) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<unsigned> e(0, 2);
  std::uniform_int_distribution<std::size_t> v(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Derivation a = term({e(rng), e(rng), e(rng)}, v(rng)) + term({e(rng), e(rng), e(rng)}, v(rng));
    const Derivation b = term({e(rng), e(rng), e(rng)}, v(rng));
    const Polynomial f = x(3, 0) * x(3, 1) + x(3, 2) * x(3, 2) * x(3, 0);
    EXPECT_EQ(commutator(a, b).apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f)));
  }
}

TEST(Nilpotency, Examples) {
  const auto simple = is_locally_nilpotent(term({0, 0, 1}, 0), 5);
  EXPECT_EQ(simple.result, Nilpotency::verified);
  EXPECT_EQ(simple.orders[0], 2u);

  EXPECT_EQ(is_locally_nilpotent(term({1, 0, 0}, 0), 5).result, Nilpotency::refuted);

  const auto nna = is_locally_nilpotent(wp112_nna_slot(), 10);
  EXPECT_EQ(nna.result, Nilpotency::verified);
  EXPECT_EQ(nna.orders[1], 4u);
}

TEST(Nilpotency, CapExceededIsNotAVerdict) {
  // x2 d1 + x1 d2 is not nilpotent, but with cap 1 the chain is cut short.
  const Derivation d = term({0, 1, 0}, 0) + term({1, 0, 0}, 1);
  const auto r = is_locally_nilpotent(d, 1);
  EXPECT_NE(r.result, Nilpotency::verified);
  EXPECT_NE(is_locally_nilpotent(d, 20).result, Nilpotency::verified);
}

TEST(Nilpotency, Wp112Chain) {
  const auto chain = derivation_chain(wp112_nna_slot(), x(3, 1), 10);
  ASSERT_EQ(chain.size(), 5u);
  EXPECT_EQ(chain[0], x(3, 1));
  EXPECT_EQ(chain[1], x(3, 0) * x(3, 0));
  EXPECT_EQ(chain[2], Rational(2) * x(3, 0) * x(3, 2));
  EXPECT_EQ(chain[3], Rational(2) * x(3, 2) * x(3, 2));
  EXPECT_TRUE(chain[4].is_zero());
}

TEST(Exponentiate, Examples) {
  const auto t = exponentiate(term({0, 0, 1}, 0), x(3, 0), 5);
  EXPECT_EQ(t.to_string(), "x1 + s*x3");

  const auto b = exponentiate(term({0, 0, 0}, 0), x(3, 0) * x(3, 0), 5);
  EXPECT_EQ(b.coefficient(0), x(3, 0) * x(3, 0));
  EXPECT_EQ(b.coefficient(1), Rational(2) * x(3, 0));
  EXPECT_EQ(b.coefficient(2), Polynomial::constant(3, 1));

  const auto w = exponentiate(wp112_nna_slot(), x(3, 1), 10);
  EXPECT_EQ(w.to_string(), "x2 + s*x1^2 + s^2*x1*x3 + 1/3*s^3*x3^2");

  EXPECT_THROW(exponentiate(term({1, 0, 0}, 0), x(3, 0), 5), InputError);
}

// exp(sD) is a ring homomorphism: exp(sD)(fg) = exp(sD)(f) exp(sD)(g).
TEST(Exponentiate, IsMultiplicativeOnMonomials) {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<unsigned> e(0, 2);
  const Derivation d = wp112_nna_slot() + term({0, 0, 2}, 1, 3);
  ASSERT_EQ(is_locally_nilpotent(d, 20).result, Nilpotency::verified);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f(Monomial({e(rng), e(rng), e(rng)}));
    const Polynomial g(Monomial({e(rng), e(rng), e(rng)}));
    EXPECT_EQ(exponentiate(d, f * g, 40), exponentiate(d, f, 40) * exponentiate(d, g, 40));
  }
}

TEST(HomogeneousComponent, Examples) {
  const DegreeMap d2 = degree_map(*detect_additive_structure(kP2));
  EXPECT_EQ(homogeneous_component(d2, {1}),
            (std::vector<Monomial>{Monomial({1, 0, 0}), Monomial({0, 1, 0}), Monomial({0, 0, 1})}));
  const DegreeMap dw = degree_map(*detect_additive_structure(kWp112));
  EXPECT_EQ(homogeneous_component(dw, {2}),
            (std::vector<Monomial>{Monomial({2, 0, 0}), Monomial({1, 0, 1}), Monomial({0, 1, 0}),
                                   Monomial({0, 0, 2})}));
  EXPECT_EQ(homogeneous_component(dw, {0}), std::vector<Monomial>{Monomial::one(3)});
}

// The degree of x_i is spanned by x_i and the monomials d_e(x_i), e in R_i;
// checked against a lattice-membership oracle that knows nothing of roots.
TEST(HomogeneousComponent, VariableClassesMatchMembershipOracle) {
  for (const auto& name : {"p2", "wp112", "wp123", "p1xp1", "hirzebruch_2", "final_family_n2"}) {
    const FanFile ff = test::load_fixture(name);
    const RaySystem rs(ff.rays);
    const auto s = detect_additive_structure(rs);
    const DegreeMap dm = degree_map(*s);
    const auto cat = enumerate_roots(rs, s);
    EXPECT_TRUE(homogeneous_basis_violations(rs, dm, cat).empty()) << name;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::vector<std::vector<unsigned>> lib;
      for (const auto& m : homogeneous_component(dm, dm.degrees[i])) lib.push_back(m.exponents());
      EXPECT_EQ(lib, test::class_of_variable(ff.rays, i, 6)) << name << " x" << i + 1;
    }
  }
}

TEST(HomogeneousComponent, DefaultCapBoundsChains) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sample = test::random_structured(rng);
    const RaySystem rs(sample.rays);
    const auto s = detect_additive_structure(rs);
    const DegreeMap dm = degree_map(*s);
    const std::size_t cap = default_nilpotency_cap(dm);
    for (const auto& set : enumerate_roots(rs, s).per_ray) {
      for (const auto& e : set) {
        EXPECT_NE(is_locally_nilpotent(root_derivation(rs, e), cap).result,
                  Nilpotency::cap_exceeded);
      }
    }
  }
}
