#include <gtest/gtest.h>

#include "hmf/harness/oracles.hpp"
#include "hmf/harness/sampling.hpp"
#include "hmf/theta.hpp"

using namespace hmf;

namespace {

// One-variable factor: sum over x in Z[eta] + s of exp(i kappa (tau |x|^2 + beta (Re x + Im x))).
cplx one_dimensional(cplx basis, cplx shift, cplx tau, double kappa, int beta) {
  cplx sum = 0.0;
  for (int m = -30; m <= 30; ++m)
    for (int n = -30; n <= 30; ++n) {
      const cplx x = static_cast<double>(m) + static_cast<double>(n) * basis + shift;
      const double linear = static_cast<double>(beta) * (x.real() + x.imag());
      sum += std::exp(cplx(0.0, kappa) * (tau * std::norm(x) + linear));
    }
  return sum;
}

HermitianPoint diagonal(cplx a, cplx b) {
  Mat2 z = Mat2::Zero();
  z(0, 0) = a;
  z(1, 1) = b;
  return HermitianPoint(z);
}

}  // namespace

TEST(Table, Eisenstein) {
  const auto t = characteristic_table(ThetaCase::eisenstein);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[0].shift, (std::array<int, 2>{0, 0}));
  EXPECT_EQ(t[4].shift, (std::array<int, 2>{1, -1}));
  EXPECT_THROW(eisenstein_characteristic(2, 0), std::invalid_argument);
}

TEST(Table, Gauss) {
  const auto t = characteristic_table(ThetaCase::gauss);
  EXPECT_EQ(t.size(), 10u);
  const auto g = gauss_generators();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[4].shift, (std::array<int, 2>{1, 1}));
  EXPECT_EQ(g[4].beta, (std::array<int, 2>{1, 1}));
  for (const auto& ch : g) EXPECT_NE(std::find(t.begin(), t.end(), ch), t.end());
  EXPECT_THROW(gauss_characteristic({1, 0}, {1, 0}), std::invalid_argument);
  EXPECT_EQ(g[4].label(), "Theta[1111]");
}

TEST(Theta, ThetaOneAtTenIE) {
  const HermitianPoint z(10.0 * I * Mat2::Identity());
  const auto ch = characteristic_table(ThetaCase::eisenstein)[0];
  const cplx v = theta_eval(ch, z);
  EXPECT_LT(std::abs(v - 1.0), 1e-12);
  EXPECT_LT(std::abs(v - harness::brute_force_theta(ch, z, 3.0)), 1e-12);
  const Mat2 g = theta_gradient(ch, z);
  EXPECT_LT(g.cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Theta, DiagonalPointsFactor) {
  const cplx w(-0.5, std::sqrt(3.0) / 2.0);
  const cplx tau1(0.2, 0.7), tau2(-0.4, 0.9);
  const auto z = diagonal(tau1, tau2);
  for (const auto& ch : characteristic_table(ThetaCase::eisenstein)) {
    const cplx s1 = static_cast<double>(ch.shift[0]) * cplx(0.0, -1.0 / std::sqrt(3.0));
    const cplx s2 = static_cast<double>(ch.shift[1]) * cplx(0.0, -1.0 / std::sqrt(3.0));
    const cplx expected = one_dimensional(w, s1, tau1, 2.0 * pi, 0) * one_dimensional(w, s2, tau2, 2.0 * pi, 0);
    EXPECT_LT(std::abs(theta_eval(ch, z) - expected), 1e-11) << ch.label();
  }
  for (const auto& ch : characteristic_table(ThetaCase::gauss)) {
    const cplx s1 = 0.5 * static_cast<double>(ch.shift[0]) * cplx(1.0, 1.0);
    const cplx s2 = 0.5 * static_cast<double>(ch.shift[1]) * cplx(1.0, 1.0);
    const cplx expected =
        one_dimensional(I, s1, tau1, pi, ch.beta[0]) * one_dimensional(I, s2, tau2, pi, ch.beta[1]);
    EXPECT_LT(std::abs(theta_eval(ch, z) - expected), 1e-11) << ch.label();
  }
}

TEST(Theta, AgreesWithBoxSum) {
  Rng rng(31);
  for (int k = 0; k < 3; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    for (auto kind : {ThetaCase::eisenstein, ThetaCase::gauss}) {
      const auto ch = characteristic_table(kind)[static_cast<std::size_t>(k + 1)];
      const auto jet = theta_jet(ch, z, {}, false);
      EXPECT_LT(std::abs(jet.value - harness::brute_force_theta(ch, z, jet.radius + 3.0)), 1e-12) << ch.label();
    }
  }
}

TEST(Theta, GradientMatchesFiniteDifferences) {
  Rng rng(32);
  for (int k = 0; k < 5; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    for (auto kind : {ThetaCase::eisenstein, ThetaCase::gauss}) {
      const auto ch = characteristic_table(kind)[static_cast<std::size_t>(k)];
      const Mat2 g = theta_gradient(ch, z);
      const double h = 1e-5;
      for (int e = 0; e < 4; ++e) {
        Mat2 dz = Mat2::Zero();
        dz(e / 2, e % 2) = h;
        const cplx fd = (theta_eval(ch, HermitianPoint(z.z + dz)) - theta_eval(ch, HermitianPoint(z.z - dz))) / (2.0 * h);
        EXPECT_LT(std::abs(fd - g(e / 2, e % 2)), 1e-6 * std::max(1.0, std::abs(fd))) << ch.label();
      }
    }
  }
}

TEST(Theta, GradientIsNotSymmetric) {
  Rng rng(33);
  const auto z = harness::random_hermitian_point(rng);
  const Mat2 g = theta_gradient(characteristic_table(ThetaCase::eisenstein)[1], z);
  EXPECT_GT(std::abs(g(0, 1) - g(1, 0)), 1e-6);
}

TEST(Theta, Symmetric) {
  Rng rng(34);
  for (int k = 0; k < 10; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    for (auto kind : {ThetaCase::eisenstein, ThetaCase::gauss})
      for (const auto& ch : characteristic_table(kind)) {
        const cplx a = theta_eval(ch, z);
        const cplx b = theta_eval(ch, z.transposed());
        EXPECT_LT(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(a))) << ch.label();
      }
  }
}

TEST(Theta, RadiusIncreaseStaysWithinBound) {
  Rng rng(35);
  for (int k = 0; k < 5; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    for (auto kind : {ThetaCase::eisenstein, ThetaCase::gauss}) {
      const auto ch = characteristic_table(kind)[0];
      const auto jet = theta_jet(ch, z);
      const auto wide = theta_at_radius(ch, z, jet.radius + 3.0, true);
      EXPECT_LE(std::abs(jet.value - wide.value), jet.value_tail);
      EXPECT_LE((jet.gradient - wide.gradient).cwiseAbs().maxCoeff(), jet.gradient_tail);
    }
  }
}

TEST(Theta, TighterBoundNeedsLargerRadius) {
  Rng rng(36);
  const auto z = harness::random_hermitian_point(rng);
  const auto ch = characteristic_table(ThetaCase::gauss)[3];
  TruncationPolicy loose;
  loose.tail_bound = 1e-6;
  TruncationPolicy tight;
  tight.tail_bound = 0.5e-6;
  const auto a = theta_jet(ch, z, loose, false);
  const auto b = theta_jet(ch, z, tight, false);
  EXPECT_GE(b.radius, a.radius);
  EXPECT_LE(b.value_tail, 0.5e-6);
  EXPECT_LE(std::abs(a.value - b.value), a.value_tail + b.value_tail);
}

TEST(Theta, RefusesSmallMargin) {
  Mat2 z = Mat2::Zero();
  z(0, 0) = cplx(0.0, 0.1);
  z(1, 1) = cplx(0.0, 1.0);
  EXPECT_THROW(theta_eval(characteristic_table(ThetaCase::eisenstein)[0], HermitianPoint(z)), margin_error);
  TruncationPolicy capped;
  capped.max_radius = 1.5;
  EXPECT_THROW(theta_eval(characteristic_table(ThetaCase::eisenstein)[0], HermitianPoint(I * Mat2::Identity()), capped),
               margin_error);
}

TEST(Phi10, ProductSymmetryAndNonvanishing) {
  Rng rng(37);
  for (int k = 0; k < 10; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    cplx prod = 1.0;
    double smallest = 1e300;
    for (const auto& ch : characteristic_table(ThetaCase::gauss)) {
      const cplx v = theta_eval(ch, z);
      prod *= v;
      smallest = std::min(smallest, std::abs(v));
    }
    const cplx p = phi10(z);
    EXPECT_EQ(p, prod);
    EXPECT_LT(std::abs(phi10(z.transposed()) - p), 1e-8 * std::abs(p));
    if (smallest > 1e-6) {
      EXPECT_GT(std::abs(p), 0.0);
    }
  }
}

TEST(ParseCase, Names) {
  EXPECT_EQ(parse_theta_case("eisenstein"), ThetaCase::eisenstein);
  EXPECT_EQ(parse_theta_case("gauss"), ThetaCase::gauss);
  EXPECT_THROW(parse_theta_case("jacobi"), std::invalid_argument);
}
