#include <gtest/gtest.h>

#include <cmath>

#include "oracle_fixtures.hpp"
#include "susyzeta/monomial.hpp"
#include "susyzeta/verification.hpp"
#include "test_support.hpp"

using namespace susyzeta;
using testing_support::rel_err;

TEST(OmegaParam, RejectsZeroNonFiniteAndComplex) {
  EXPECT_THROW(OmegaParam(0.0), InvalidArgument);
  EXPECT_THROW(OmegaParam(NAN), InvalidArgument);
  EXPECT_THROW(OmegaParam::from_complex({1.0, 1e-300}), InvalidArgument);
  EXPECT_EQ(OmegaParam::from_complex({-2.5, 0.0}).value(), -2.5);
  EXPECT_EQ(OmegaParam(3.0).half(), 1.5);
}

TEST(MonomialState, SigmaMustLieInStrip) {
  EXPECT_THROW(MonomialState(0.0, 1.0), DomainError);
  EXPECT_THROW(MonomialState(1.0, 1.0), DomainError);
  EXPECT_THROW(MonomialState(-0.2, 1.0), DomainError);
  EXPECT_THROW(MonomialState(0.5, NAN), InvalidArgument);
  const MonomialState st(0.5, 2.0, Parity::odd, {1.0, 2.0});
  EXPECT_EQ(st.exponent(), cplx(-0.5, 2.0));
}

TEST(ApplyO, Values) {
  const auto out = apply_O(MonomialState(0.5, 0.0));
  EXPECT_NEAR(out.coeff().real(), fixtures::eta_half, 1e-14);
  // same number through the literal (1 - 2^{1-s}) zeta(s) product
  const ComplexPoint s(0.5, 0.0);
  EXPECT_LT(rel_err(out.coeff(), prefactor(s) * zeta_right(s)), 1e-14);
  EXPECT_EQ(out.rho(), 0.0);
  EXPECT_EQ(out.sigma(), 0.5);

  EXPECT_LT(std::abs(apply_O(MonomialState(0.5, -14.134725)).coeff()), 1e-4);
}

TEST(ApplyO, Linear) {
  const MonomialState st(0.3, 4.0, Parity::even, {0.7, -1.1});
  const cplx k{-2.0, 0.5};
  EXPECT_LT(rel_err(apply_O(st.scaled(k)).coeff(), k * apply_O(st).coeff()), 1e-15);
}

TEST(ApplyODagger, Values) {
  EXPECT_EQ(apply_O_dagger(MonomialState(0.5, 0.0)).coeff(), apply_O(MonomialState(0.5, 0.0)).coeff());
  const auto out = apply_O_dagger(MonomialState(0.3, 0.0));
  EXPECT_NEAR(out.coeff().real(), fixtures::o_dagger_03, 1e-14);
  const ComplexPoint s(0.3, 0.0);
  EXPECT_LT(rel_err(out.coeff(), (1.0 - std::pow(2.0, 0.3)) * zeta_right(s.reflect())), 1e-14);
  EXPECT_EQ(apply_O_dagger(MonomialState(0.3, 1.0, Parity::odd)).parity(), Parity::odd);
}

TEST(ApplyA, OmegaTwiceRho) {
  const double sigma = 0.3;
  const double rho = 1.75;
  const OmegaParam w(2.0 * rho);
  const auto out = apply_A(w, MonomialState(sigma, rho));
  EXPECT_EQ(out.rho(), -rho);
  const ComplexPoint s(sigma, 0.0);
  EXPECT_LT(rel_err(out.coeff(), prefactor(s) * zeta_right(s)), 1e-13);
}

TEST(ApplyA, AnnihilatesGroundStateAtZero) {
  const double lambda_star = fixtures::zeros_0_60[0];
  for (double omega : {0.5, 1.0, 3.0, -2.0}) {
    const OmegaParam w(omega);
    const auto out = apply_A(w, MonomialState(0.5, w.half() - lambda_star));
    EXPECT_LT(std::abs(out.coeff()), 1e-8) << omega;
  }
}

TEST(ApplyA, EqualsShiftedO) {
  SampleRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const MonomialState st(rng.uniform(0.05, 0.95), rng.uniform(-20, 20), Parity::even, rng.complex_in_box(1));
    const OmegaParam w(rng.signed_magnitude(0.5, 4.0));
    const auto chain = shift(apply_O(shift(st, -w.half())), -w.half());
    const auto direct = apply_A(w, st);
    EXPECT_LT(rel_err(direct.coeff(), chain.coeff()), 1e-14);
    EXPECT_NEAR(direct.rho(), chain.rho(), 1e-13);
  }
}

TEST(ApplyADagger, Values) {
  const OmegaParam w(3.0);
  const auto out = apply_A_dagger(w, MonomialState(0.5, -w.half()));
  EXPECT_LT(rel_err(out.coeff(), (1.0 - std::sqrt(2.0)) * fixtures::zeta_half), 1e-13);
  EXPECT_EQ(out.rho() - (-w.half()), w.value());
}

TEST(ApplyADagger, AdjointPairingOnCriticalLine) {
  SampleRng rng(17);
  for (int i = 0; i < 100; ++i) {
    const double rho = rng.uniform(-25, 25);
    const OmegaParam w(rng.signed_magnitude(0.5, 5.0));
    const cplx up = a_dagger_multiplier(0.5, rho, w);
    const cplx down = a_multiplier(0.5, rho + w.value(), w);
    EXPECT_LT(rel_err(up, std::conj(down)), 1e-12);
  }
}

TEST(Hamiltonians, CompositionIdentities) {
  SampleRng rng(23);
  for (int i = 0; i < 200; ++i) {
    const MonomialState st(rng.uniform(0.05, 0.95), rng.uniform(-25, 25),
                           rng.coin() ? Parity::even : Parity::odd, rng.complex_in_box(2));
    const OmegaParam w(rng.signed_magnitude(0.5, 5.0));
    EXPECT_LT(rel_err(apply_H_minus(w, st).coeff(), apply_A_dagger(w, apply_A(w, st)).coeff()), 1e-12);
    EXPECT_LT(rel_err(apply_H_plus(w, st).coeff(), apply_A(w, apply_A_dagger(w, st)).coeff()), 1e-12);
    EXPECT_EQ(apply_H_minus(w, st).rho(), st.rho());
    EXPECT_EQ(apply_H_plus(w, st).parity(), st.parity());
  }
}

TEST(Hamiltonians, OAndODaggerCommute) {
  SampleRng rng(29);
  for (int i = 0; i < 200; ++i) {
    const MonomialState st(rng.uniform(0.05, 0.95), rng.uniform(-25, 25));
    EXPECT_LT(rel_err(apply_O(apply_O_dagger(st)).coeff(), apply_O_dagger(apply_O(st)).coeff()), 1e-12);
  }
}

TEST(Hamiltonians, RealNonNegativeOnCriticalLine) {
  SampleRng rng(31);
  for (int i = 0; i < 100; ++i) {
    const cplx e = eigenvalue_H_minus(0.5, rng.uniform(-30, 30), OmegaParam(rng.signed_magnitude(0.1, 6)));
    EXPECT_LE(std::abs(e.imag()), 1e-12);
    EXPECT_GE(e.real(), 0.0);
  }
}

TEST(Hamiltonians, OffCriticalLineValues) {
  const OmegaParam w(2.0);
  const cplx generic = eigenvalue_H_minus(0.3, 2.0, w);
  EXPECT_LT(std::abs(generic - fixtures::h_minus_03_rho2_w2), 1e-14);
  EXPECT_GT(std::abs(generic.imag()), 1e-3);
  // rho = omega/2 puts both factors on the real axis
  const cplx real_case = eigenvalue_H_minus(0.3, 1.0, w);
  EXPECT_NEAR(real_case.real(), fixtures::h_minus_03_rho1_w2, 1e-14);
  EXPECT_EQ(real_case.imag(), 0.0);
}

TEST(Hamiltonians, OffCriticalLineNotReal) {
  SampleRng rng(37);
  for (int i = 0; i < 50; ++i) {
    double sigma = rng.uniform(0.05, 0.95);
    while (std::abs(sigma - 0.5) <= 0.05) sigma = rng.uniform(0.05, 0.95);
    const cplx e = eigenvalue_H_minus(sigma, rng.uniform(-25, 25), OmegaParam(rng.signed_magnitude(0.5, 5)));
    if (std::abs(e) < 1e-10) continue;
    EXPECT_GT(std::abs(e.imag()), 1e-10) << sigma;
  }
}

TEST(Hamiltonians, EigenvalueMatchesStateAction) {
  const OmegaParam w(1.3);
  const MonomialState unit(0.4, 7.0);
  EXPECT_EQ(apply_H_minus(w, unit).coeff(), eigenvalue_H_minus(0.4, 7.0, w));
  EXPECT_EQ(apply_H_plus(w, unit).coeff(), eigenvalue_H_plus(0.4, 7.0, w));
  // H+ at rho - w and H- at rho share their evaluation point
  EXPECT_LT(rel_err(eigenvalue_H_plus(0.4, 7.0 - 1.3, w), eigenvalue_H_minus(0.4, 7.0, w)), 1e-14);
  EXPECT_THROW(eigenvalue_H_minus(1.0, 0.0, w), DomainError);
}

TEST(ZeroState, IsAbsorbing) {
  const OmegaParam w(2.0);
  // huge rho would exceed the series budget if evaluated
  const MonomialState zero(0.5, 1e6, Parity::odd, 0.0);
  EXPECT_TRUE(apply_O(zero).is_zero());
  EXPECT_TRUE(apply_O_dagger(zero).is_zero());
  EXPECT_TRUE(apply_H_minus(w, zero).is_zero());
  EXPECT_TRUE(apply_H_plus(w, zero).is_zero());
  const auto down = apply_A(w, zero);
  EXPECT_TRUE(down.is_zero());
  EXPECT_EQ(down.rho(), 1e6 - 2.0);
  EXPECT_TRUE(apply_A_dagger(w, zero).is_zero());
}

TEST(Superposition, RequiresMatchingLabels) {
  const MonomialState a(0.5, 1.0, Parity::even, 2.0);
  const MonomialState b(0.5, 1.5, Parity::even, 1.0);
  EXPECT_THROW(add(a, b), InvalidArgument);
  EXPECT_EQ(add(a, b.zero()).coeff(), cplx(2.0));
  EXPECT_EQ(subtract(a, a).coeff(), cplx(0.0));
  EXPECT_THROW(add(a, MonomialState(0.5, 1.0, Parity::odd, 1.0)), InvalidArgument);
}

TEST(AlgebraSuite, PassesForSeveralSeeds) {
  for (std::uint64_t seed : {1ULL, 42ULL, 12345ULL}) {
    const auto report = algebra_suite(seed);
    EXPECT_TRUE(report.passed()) << report.to_text();
  }
}
