#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "hmf/groups.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/harness/sampling.hpp"
#include "hmf/harness/serialize.hpp"
#include "hmf/harness/suite.hpp"

using namespace hmf;

namespace {

double dist(const QuaternionicPoint& a, const QuaternionicPoint& b) { return (a.as_vector() - b.as_vector()).norm(); }

}  // namespace

TEST(Membership, HermitianExamples) {
  const auto a = membership_hermitian(Mat2(I * Mat2::Identity()));
  EXPECT_TRUE(a.member);
  EXPECT_NEAR(a.margin, 2.0, 1e-15);
  EXPECT_FALSE(membership_hermitian(Mat2(-I * Mat2::Identity())).member);
  Mat2 z;
  z << 2.0 * I, I, 0.0, 2.0 * I;
  const auto b = membership_hermitian(z);
  EXPECT_TRUE(b.member);
  // i(conj(Z)' - Z) = [[4, 1], [1, 4]] has eigenvalues 3 and 5.
  EXPECT_NEAR(b.margin, 3.0, 1e-14);
  EXPECT_NEAR(imag_margin(HermitianPoint(z)), 1.5, 1e-14);
}

TEST(Membership, QuaternionicExamples) {
  const QuaternionicPoint p(I, I, ComplexQuaternion{});
  EXPECT_TRUE(quat_membership(p).member);
  EXPECT_LT((quat_pack(p) - I * Mat4::Identity()).norm(), 1e-15);
  EXPECT_FALSE(quat_membership(QuaternionicPoint(-I, -I, ComplexQuaternion{})).member);
  // Y = [[1, 1], [1, 1]] is only semidefinite.
  EXPECT_FALSE(quat_membership(QuaternionicPoint(I, I, ComplexQuaternion{I, 0.0, 0.0, 0.0})).member);
}

TEST(QuatPack, RoundTripAndSlice) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto p = harness::random_quaternionic_point(rng);
    const Mat4 w = quat_pack(p);
    EXPECT_LT(slice_residual(w), 1e-15);
    EXPECT_LT(dist(quat_unpack(w), p), 1e-14);
  }
  Mat4 bad = Mat4::Zero();
  bad(0, 1) = 1.0;
  EXPECT_THROW(quat_unpack(bad), slice_error);
}

TEST(QuatPack, LinearAndInjective) {
  Eigen::Matrix<cplx, 16, 6> images;
  for (int k = 0; k < 6; ++k) {
    Vec6 e = Vec6::Zero();
    e(k) = 1.0;
    const Mat4 w = quat_pack(QuaternionicPoint::from_vector(e));
    images.col(k) = Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(w.data());
  }
  const Eigen::FullPivLU<Eigen::Matrix<cplx, 16, 6>> lu(images);
  EXPECT_EQ(lu.rank(), 6);
  Rng rng(12);
  const Vec6 a = harness::random_matrix<6, 1>(rng), b = harness::random_matrix<6, 1>(rng);
  const cplx s(0.3, -1.2);
  const Mat4 lhs = quat_pack(QuaternionicPoint::from_vector(a + s * b));
  const Mat4 rhs = quat_pack(QuaternionicPoint::from_vector(a)) + s * quat_pack(QuaternionicPoint::from_vector(b));
  EXPECT_LT((lhs - rhs).norm(), 1e-14);
}

TEST(Moebius, JFixesIE) {
  const HermitianPoint z(I * Mat2::Identity());
  EXPECT_LT((moebius(EisensteinElement::j(), z).z - z.z).norm(), 1e-15);
  const QuaternionicPoint q(I, I, ComplexQuaternion{});
  EXPECT_LT(dist(moebius(QuaternionicElement::j(), q), q), 1e-15);
}

TEST(Moebius, TranslationAddsH) {
  Matrix2x2<GaussInt> h;
  h(0, 0) = GaussInt(2);
  h(0, 1) = GaussInt(1, -3);
  h(1, 0) = GaussInt(1, 3);
  h(1, 1) = GaussInt(-1);
  const auto t = GaussElement::translation(h);
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    Mat2 hc;
    hc << 2.0, cplx(1, -3), cplx(1, 3), -1.0;
    EXPECT_LT((moebius(t, z).z - (z.z + hc)).norm(), 1e-13);
  }
}

TEST(Moebius, QuaternionicTranslationAddsH) {
  Matrix2x2<RationalQuaternion> h;
  h(0, 0) = RationalQuaternion(Rational(1));
  h(0, 1) = HurwitzInt::omega().value();
  h(1, 0) = HurwitzInt::omega().value().conj();
  h(1, 1) = RationalQuaternion(Rational(-2));
  const auto t = QuaternionicElement::translation(h);
  Rng rng(14);
  const auto z = harness::random_quaternionic_point(rng);
  const auto w = moebius(t, z);
  EXPECT_LT(std::abs(w.z0() - (z.z0() + 1.0)), 1e-13);
  EXPECT_LT(std::abs(w.z2() - (z.z2() - 2.0)), 1e-13);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_LT(std::abs(w.coords[2 + c] - (z.coords[2 + c] + 0.5)), 1e-13);
}

TEST(Moebius, CenterActsTrivially) {
  Rng rng(15);
  const Mat4 e = Mat4::Identity();
  const Mat8 e8 = Mat8::Identity();
  for (int k = 0; k < 10; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    EXPECT_LT((moebius(e, z).z - z.z).norm(), 1e-14);
    EXPECT_LT((moebius(Mat4(-e), z).z - z.z).norm(), 1e-14);
    const auto q = harness::random_quaternionic_point(rng);
    EXPECT_LT(dist(moebius(e8, q), q), 1e-14);
    EXPECT_LT(dist(moebius(Mat8(-e8), q), q), 1e-14);
  }
}

TEST(Moebius, CocycleAndMembership) {
  Rng rng(16);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const auto m1 = random_word<EisensteinInt>(static_cast<int>(rng.integer(1, 6)), rng.next());
    const auto m2 = random_word<EisensteinInt>(static_cast<int>(rng.integer(1, 6)), rng.next());
    const auto z = harness::random_hermitian_point(rng);
    try {
      const auto w = moebius(m1 * m2, z);
      EXPECT_TRUE(membership_hermitian(w).member);
      EXPECT_GT(membership_hermitian(w).margin, 0.0);
      const auto w2 = moebius(m1, moebius(m2, z));
      EXPECT_LT((w.z - w2.z).norm() / std::max(1.0, w.z.norm()), 1e-10);
      ++checked;
    } catch (const singular_matrix&) {
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(Moebius, QuaternionicCocycle) {
  Rng rng(17);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const auto m1 = random_word<RationalQuaternion>(static_cast<int>(rng.integer(1, 4)), rng.next());
    const auto m2 = random_word<RationalQuaternion>(static_cast<int>(rng.integer(1, 4)), rng.next());
    const auto z = harness::random_quaternionic_point(rng);
    try {
      const auto w = moebius(m1 * m2, z);
      EXPECT_TRUE(quat_membership(w).member);
      EXPECT_LT(dist(w, moebius(m1, moebius(m2, z))) / std::max(1.0, w.as_vector().norm()), 1e-10);
      ++checked;
    } catch (const singular_matrix&) {
    }
  }
  EXPECT_GT(checked, 70);
}

TEST(Moebius, SingularBlockThrows) {
  // C = D = 0 is not a group element but exercises the guard.
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = Mat2::Identity();
  EXPECT_THROW(moebius(m, HermitianPoint(I * Mat2::Identity())), singular_matrix);
}

TEST(Involution, TauIsAnInvolution) {
  Rng rng(18);
  for (int k = 0; k < 20; ++k) {
    const auto z = harness::random_hermitian_point(rng);
    EXPECT_EQ(involution_tau(involution_tau(z)).z, z.z);
    EXPECT_TRUE(membership_hermitian(involution_tau(z)).member);
    const auto q = harness::random_quaternionic_point(rng);
    EXPECT_LT(dist(involution_tau(involution_tau(q)), q), 1e-15);
    EXPECT_TRUE(quat_membership(involution_tau(q)).member);
  }
}

TEST(Involution, QuaternionicTauMatchesQuaternionTranspose) {
  // [[z0, z1], [conj(z1), z2]]' = [[z0, conj(z1)], [z1, z2]]: in packed form the
  // off-diagonal 2x2 blocks trade places.
  Rng rng(19);
  for (int k = 0; k < 20; ++k) {
    const auto q = harness::random_quaternionic_point(rng);
    Mat4 w = quat_pack(q);
    const Mat2 upper = w.block<2, 2>(0, 2);
    w.block<2, 2>(0, 2) = w.block<2, 2>(2, 0);
    w.block<2, 2>(2, 0) = upper;
    EXPECT_LT(dist(quat_unpack(w), involution_tau(q)), 1e-14);
  }
}

TEST(Involution, ComplexTransposeOfPackedMatrixIsASignedPermutation) {
  // check(x)' = J2^{-1} check(conj x) J2 keeps the transpose on the slice, but the
  // induced map is (z10, -z11, z12, -z13), not quaternion conjugation.
  SignedPermutation s;
  s.signs = {1, -1, 1, -1};
  Rng rng(22);
  for (int k = 0; k < 10; ++k) {
    const auto q = harness::random_quaternionic_point(rng);
    const Mat4 w = quat_pack(q).transpose();
    EXPECT_LT(slice_residual(w), 1e-15);
    EXPECT_LT(dist(quat_unpack(w), involution_action(s, q)), 1e-15);
    EXPECT_GT(dist(quat_unpack(w), involution_tau(q)), 1e-3);
  }
}

TEST(Involution, SignedPermutationExample) {
  SignedPermutation s;
  s.perm = {1, 0, 2, 3};
  const QuaternionicPoint p(I, 2.0 * I, ComplexQuaternion{0.1, 0.2, 0.3, 0.4});
  const auto q = involution_action(s, p);
  EXPECT_EQ(q.coords[2], cplx(0.2));
  EXPECT_EQ(q.coords[3], cplx(0.1));
  EXPECT_EQ(q.coords[4], cplx(0.3));
  EXPECT_EQ(q.coords[5], cplx(0.4));
  EXPECT_EQ(q.z0(), p.z0());
  EXPECT_EQ(q.z2(), p.z2());
}

TEST(Involution, OddSignsRejected) {
  SignedPermutation s;
  s.signs = {1, -1, 1, 1};
  EXPECT_THROW(involution_action(s, QuaternionicPoint(I, I, ComplexQuaternion{})), invalid_element);
}

TEST(Involution, EvenSignedPermutationsCloseAndPreserveMembership) {
  Rng rng(20);
  auto draw = [&] {
    SignedPermutation s;
    for (std::size_t k = 0; k < 4; ++k) s.perm[k] = static_cast<int>(k);
    for (int k = 3; k > 0; --k) std::swap(s.perm[static_cast<std::size_t>(k)], s.perm[static_cast<std::size_t>(rng.integer(0, k))]);
    do {
      for (auto& x : s.signs) x = rng.integer(0, 1) == 0 ? 1 : -1;
    } while (!s.even());
    return s;
  };
  for (int k = 0; k < 50; ++k) {
    const auto s = draw();
    const auto t = draw();
    EXPECT_TRUE((s * t).even());
    const auto q = harness::random_quaternionic_point(rng);
    const auto lhs = involution_action(s * t, q);
    EXPECT_LT(dist(lhs, involution_action(s, involution_action(t, q))), 1e-15);
    EXPECT_TRUE(quat_membership(lhs).member);
  }
}

TEST(DataFiles, SamplePointsAreMembers) {
  const std::string dir = HMF_DATA_DIR;
  for (const char* name : {"/point_10iE.json", "/point_hermitian.json"}) {
    const auto z = harness::hermitian_point_from_json(harness::read_json_file(dir + name));
    EXPECT_GE(imag_margin(z), 0.4) << name;
  }
  const auto q = harness::quaternionic_point_from_json(harness::read_json_file(dir + "/point_quaternionic.json"));
  EXPECT_TRUE(quat_membership(q).member);
}
