#include <gtest/gtest.h>

#include "hmf/brackets.hpp"
#include "hmf/harness/oracles.hpp"
#include "hmf/harness/sampling.hpp"

using namespace hmf;

namespace {

std::vector<HermitianForm> eisenstein_thetas() {
  std::vector<HermitianForm> out;
  for (const auto& ch : characteristic_table(ThetaCase::eisenstein)) out.push_back(theta_form(ch));
  return out;
}

QuaternionicForm constant_form(cplx c, int weight) {
  harness::Polynomial<6> p;
  p.terms.push_back({c, {}});
  return harness::polynomial_form(p, weight, "const");
}

std::vector<QuaternionicForm> random_septuple(Rng& rng) {
  std::vector<QuaternionicForm> forms;
  for (int k = 0; k < 6; ++k)
    forms.push_back(harness::polynomial_form(harness::Polynomial<6>::random(rng), 1, "f" + std::to_string(k + 1)));
  forms.push_back(harness::polynomial_form(harness::Polynomial<6>::random(rng), 3, "g"));
  return forms;
}

}  // namespace

TEST(Bracket, SelfBracketVanishes) {
  Rng rng(61);
  const auto f = eisenstein_thetas()[1];
  const auto z = harness::random_hermitian_point(rng);
  EXPECT_EQ(bracket(f, f, z), Mat2::Zero());
  const auto q = harness::polynomial_form(harness::Polynomial<6>::random(rng), 2, "q");
  EXPECT_EQ(bracket(q, q, harness::random_quaternionic_point(rng)), Vec6::Zero());
}

TEST(Bracket, SkewAndBilinear) {
  Rng rng(62);
  const auto f = harness::polynomial_form(harness::Polynomial<4>::random(rng), 2, "f");
  const auto g = harness::polynomial_form(harness::Polynomial<4>::random(rng), 3, "g");
  const cplx c(0.7, -1.9);
  auto scaled = f;
  auto inner = f.jet;
  scaled.jet = [inner, c](const HermitianPoint& z) {
    auto j = inner(z);
    return FormJet<HermitianPoint>{c * j.value, c * j.gradient};
  };
  for (int k = 0; k < 10; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    const Mat2 fg = bracket(f, g, z);
    EXPECT_LT((fg + bracket(g, f, z)).norm(), 1e-12 * std::max(1.0, fg.norm()));
    EXPECT_LT((bracket(scaled, g, z) - c * fg).norm(), 1e-12 * std::max(1.0, fg.norm()));
  }
}

TEST(Bracket, QuotientRuleForWeightOne) {
  Rng rng(63);
  const auto thetas = eisenstein_thetas();
  const auto& f = thetas[1];
  const auto& g = thetas[0];
  for (int k = 0; k < 3; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    const cplx gz = g.value(z);
    ASSERT_GT(std::abs(gz), 1e-3);
    const double h = 1e-5;
    Mat2 grad_quotient;
    for (int e = 0; e < 4; ++e) {
      Mat2 dz = Mat2::Zero();
      dz(e / 2, e % 2) = h;
      const HermitianPoint zp(z.z + dz), zm(z.z - dz);
      grad_quotient(e / 2, e % 2) = (f.value(zp) / g.value(zp) - f.value(zm) / g.value(zm)) / (2.0 * h);
    }
    const Mat2 expected = gz * gz * grad_quotient;
    EXPECT_LT((bracket(f, g, z) - expected).norm(), 1e-7 * std::max(1.0, expected.norm()));
  }
}

TEST(ThreeTerm, RepeatedFormIsExactlyZero) {
  Rng rng(64);
  const auto f = harness::polynomial_form(harness::Polynomial<4>::random(rng), 2, "f");
  const auto h = harness::polynomial_form(harness::Polynomial<4>::random(rng), 1, "h");
  const auto r = three_term_residual(f, f, h, harness::random_hermitian_point(rng));
  EXPECT_FALSE(r.degenerate);
  EXPECT_LT(r.residual, 1e-15);
}

TEST(ThreeTerm, PolynomialTriples) {
  Rng rng(65);
  for (int k = 0; k < 20; ++k) {
    const auto f = harness::polynomial_form(harness::Polynomial<4>::random(rng), static_cast<int>(rng.integer(1, 3)), "f");
    const auto g = harness::polynomial_form(harness::Polynomial<4>::random(rng), static_cast<int>(rng.integer(1, 3)), "g");
    const auto h = harness::polynomial_form(harness::Polynomial<4>::random(rng), static_cast<int>(rng.integer(1, 3)), "h");
    EXPECT_LT(three_term_residual(f, g, h, harness::random_hermitian_point(rng)).residual, 1e-10);
  }
}

TEST(ThreeTerm, EisensteinThetas) {
  Rng rng(66);
  const auto t = eisenstein_thetas();
  const auto z = harness::random_hermitian_point(rng);
  EXPECT_LT(three_term_residual(t[0], t[1], t[2], z).residual, 1e-8);
}

TEST(ThreeTerm, DegenerateIsReported) {
  Rng rng(67);
  harness::Polynomial<4> zero;
  zero.terms.push_back({0.0, {}});
  const auto f = harness::polynomial_form(zero, 1, "0");
  const auto r = three_term_residual(f, f, f, harness::random_hermitian_point(rng));
  EXPECT_TRUE(r.degenerate);
}

TEST(BracketDet, AlternatingInNonPivotMembers) {
  Rng rng(68);
  auto family = eisenstein_thetas();
  const auto z = harness::random_hermitian_point(rng);
  const cplx d = bracket_det(family, 0, z);
  std::swap(family[2], family[4]);
  EXPECT_LT(std::abs(bracket_det(family, 0, z) + d), 1e-12 * std::abs(d));
  EXPECT_THROW(bracket_det(std::vector<HermitianForm>(family.begin(), family.begin() + 4), 0, z),
               std::invalid_argument);
}

TEST(BracketDet, VanishesAtSymmetricPoints) {
  Rng rng(69);
  const auto family = eisenstein_thetas();
  for (int k = 0; k < 3; ++k) {
    // Z = X + iY with X, Y real symmetric.
    Mat2 zs;
    const cplx off(rng.uniform(-1.0, 1.0), rng.uniform(-0.2, 0.2));
    zs << cplx(rng.uniform(-1.0, 1.0), rng.uniform(1.0, 1.2)), off, off, cplx(rng.uniform(-1.0, 1.0), rng.uniform(1.0, 1.2));
    const HermitianPoint z(zs);
    const cplx generic = bracket_det(family, 0, harness::random_hermitian_point(rng));
    EXPECT_LT(std::abs(bracket_det(family, 0, z)), 1e-8 * std::max(1.0, std::abs(generic)));
  }
}

TEST(Reduction, ConstantFormsGiveZero) {
  std::vector<QuaternionicForm> forms;
  for (int k = 0; k < 6; ++k) forms.push_back(constant_form(cplx(1.0 + k, 0.5), 1));
  forms.push_back(constant_form(2.0, 3));
  Rng rng(70);
  const auto r = reduction_identity(forms, harness::random_quaternionic_point(rng));
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Reduction, RandomPolynomials) {
  Rng rng(71);
  for (int k = 0; k < 10; ++k) {
    const auto forms = random_septuple(rng);
    EXPECT_LT(reduction_identity_residual(forms, harness::random_quaternionic_point(rng)), 1e-8);
  }
}

TEST(Reduction, ExplicitColumnOperations) {
  // Replace column k of the 7x7 matrix by wt(f1) f1 col_k - wt(f_k) f_k col_1;
  // the gradient block then holds -{f1, f_k} and the first row is (wt(f1) f1, 0, ..., 0).
  Rng rng(72);
  const auto forms = random_septuple(rng);
  const auto z = harness::random_quaternionic_point(rng);
  Mat7 big;
  for (int k = 0; k < 7; ++k) {
    const auto j = forms[static_cast<std::size_t>(k)].jet(z);
    big(0, k) = static_cast<double>(forms[static_cast<std::size_t>(k)].weight) * j.value;
    big.block<6, 1>(1, k) = j.gradient;
  }
  const cplx a = big(0, 0);
  Mat7 reduced = big;
  for (int k = 1; k < 7; ++k) reduced.col(k) = a * big.col(k) - big(0, k) * big.col(0);
  for (int k = 1; k < 7; ++k) EXPECT_LT(std::abs(reduced(0, k)), 1e-12 * std::abs(a * big(0, k)) + 1e-14);
  // det(reduced) = a^6 det(big) and det(reduced) = a det(lower block).
  const Mat6 lower = reduced.block<6, 6>(1, 1);
  const cplx via_ops = lower.determinant() / std::pow(a, 5);
  const auto r = reduction_identity(forms, z);
  EXPECT_LT(std::abs(r.lhs / std::pow(a, 5) - via_ops), 1e-9 * std::abs(via_ops));
  EXPECT_LT(std::abs(r.rhs - lower.determinant()), 1e-9 * std::abs(r.rhs));
}

TEST(Reduction, ScalingFirstFormKeepsRatio) {
  Rng rng(73);
  auto forms = random_septuple(rng);
  const auto z = harness::random_quaternionic_point(rng);
  const auto base = reduction_identity(forms, z);
  const cplx c(1.7, 0.6);
  auto inner = forms[0].jet;
  forms[0].jet = [inner, c](const QuaternionicPoint& p) {
    auto j = inner(p);
    return FormJet<QuaternionicPoint>{c * j.value, c * j.gradient};
  };
  const auto scaled = reduction_identity(forms, z);
  const cplx c6 = std::pow(c, 6);
  EXPECT_LT(std::abs(scaled.lhs - c6 * base.lhs), 1e-9 * std::abs(c6 * base.lhs));
  EXPECT_LT(std::abs(scaled.rhs - c6 * base.rhs), 1e-9 * std::abs(c6 * base.rhs));
  EXPECT_LT(std::abs(scaled.lhs / scaled.rhs - base.lhs / base.rhs), 1e-9);
}

TEST(Reduction, RejectsSmallLeadingForm) {
  auto forms = std::vector<QuaternionicForm>(7, constant_form(1.0, 1));
  forms[0] = constant_form(1e-8, 1);
  Rng rng(74);
  EXPECT_THROW(reduction_identity(forms, harness::random_quaternionic_point(rng)), ill_conditioned);
}

TEST(Power, GradientMatchesChainRule) {
  Rng rng(75);
  const auto f = harness::polynomial_form(harness::Polynomial<4>::random(rng), 1, "f");
  const auto f3 = power(f, 3);
  EXPECT_EQ(f3.weight, 3);
  const auto z = harness::random_hermitian_point(rng);
  const auto j = f.jet(z);
  EXPECT_LT(std::abs(f3.value(z) - j.value * j.value * j.value), 1e-12 * std::abs(f3.value(z)));
  EXPECT_LT((f3.gradient(z) - 3.0 * j.value * j.value * j.gradient).norm(), 1e-12 * f3.gradient(z).norm());
  EXPECT_THROW(power(f, 0), std::invalid_argument);
}
