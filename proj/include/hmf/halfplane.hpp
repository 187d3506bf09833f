#pragma once

// The hermitian half-plane H_2 in C^{2x2} and the six-dimensional
// quaternionic half-plane, realized on 4x4 complex matrices via the check
// embedding.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hmf/arith.hpp"
#include "hmf/errors.hpp"
#include "hmf/types.hpp"

namespace hmf {

struct Membership {
  bool member = false;
  /// Smallest eigenvalue of i(conj(Z)' - Z) = 2 Im Z.
  double margin = 0.0;
};

/// Smallest eigenvalue of a 2x2 hermitian matrix [[a, b], [conj(b), d]].
inline double hermitian_min_eigenvalue(double a, double d, double abs_b) {
  return 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + abs_b * abs_b);
}

// ---------------------------------------------------------------------------
// Hermitian half-plane

/// Z in C^{2x2}; not assumed symmetric.
struct HermitianPoint {
  Mat2 z = Mat2::Zero();

  HermitianPoint() = default;
  explicit HermitianPoint(const Mat2& m) : z(m) {}

  /// Z = X + iY with X, Y hermitian.
  [[nodiscard]] Mat2 real_part() const { return 0.5 * (z + z.adjoint()); }
  [[nodiscard]] Mat2 imag_part() const { return (z - z.adjoint()) / (2.0 * I); }
  /// Z' (transpose).
  [[nodiscard]] HermitianPoint transposed() const { return HermitianPoint(z.transpose()); }
};

/// Z is a member iff both leading minors of i(conj(Z)' - Z) are positive.
inline Membership membership_hermitian(const Mat2& z) {
  const Mat2 y = I * (z.adjoint() - z);
  const double a = y(0, 0).real();
  const double d = y(1, 1).real();
  const double det = a * d - std::norm(y(0, 1));
  return {a > 0.0 && det > 0.0, hermitian_min_eigenvalue(a, d, std::abs(y(0, 1)))};
}

inline Membership membership_hermitian(const HermitianPoint& p) { return membership_hermitian(p.z); }

/// Smallest eigenvalue of Im Z; the decay rate of lattice sums is governed by it.
inline double imag_margin(const HermitianPoint& p) { return 0.5 * membership_hermitian(p).margin; }

// ---------------------------------------------------------------------------
// Quaternionic half-plane

/// Coordinates (z0, z2, z10, z11, z12, z13) of Z = [[z0, z1], [conj(z1), z2]],
/// z1 = z10 + i1 z11 + i2 z12 + i3 z13, all complex.
struct QuaternionicPoint {
  std::array<cplx, 6> coords{};

  QuaternionicPoint() = default;
  explicit QuaternionicPoint(const std::array<cplx, 6>& c) : coords(c) {}
  QuaternionicPoint(cplx z0, cplx z2, const ComplexQuaternion& z1) : coords{z0, z2, z1[0], z1[1], z1[2], z1[3]} {}

  [[nodiscard]] cplx z0() const { return coords[0]; }
  [[nodiscard]] cplx z2() const { return coords[1]; }
  [[nodiscard]] ComplexQuaternion z1() const { return {coords[2], coords[3], coords[4], coords[5]}; }

  [[nodiscard]] Vec6 as_vector() const {
    Vec6 v;
    for (int k = 0; k < 6; ++k) v(k) = coords[static_cast<std::size_t>(k)];
    return v;
  }
  static QuaternionicPoint from_vector(const Vec6& v) {
    QuaternionicPoint p;
    for (int k = 0; k < 6; ++k) p.coords[static_cast<std::size_t>(k)] = v(k);
    return p;
  }
};

inline const std::array<std::string, 6>& quaternionic_coordinate_names() {
  static const std::array<std::string, 6> names{"z0", "z2", "z10", "z11", "z12", "z13"};
  return names;
}

inline const std::array<std::string, 4>& hermitian_coordinate_names() {
  static const std::array<std::string, 4> names{"z11", "z12", "z21", "z22"};
  return names;
}

/// Check-embedded 4x4 matrix of [[z0, z1], [conj(z1), z2]].
inline Mat4 quat_pack(const QuaternionicPoint& p) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = p.z0() * Mat2::Identity();
  m.block<2, 2>(2, 2) = p.z2() * Mat2::Identity();
  m.block<2, 2>(0, 2) = check_embed(p.z1());
  m.block<2, 2>(2, 0) = check_embed(p.z1().conj());
  return m;
}

/// Largest violation of the slice equations, relative to max(1, |W|).
inline double slice_residual(const Mat4& w) {
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  double r = 0.0;
  for (int blk : {0, 2}) {
    r = std::max(r, std::abs(w(blk, blk + 1)));
    r = std::max(r, std::abs(w(blk + 1, blk)));
    r = std::max(r, std::abs(w(blk, blk) - w(blk + 1, blk + 1)));
  }
  const Mat2 expected = j2() * w.block<2, 2>(0, 2).transpose() * j2().inverse();
  r = std::max(r, (w.block<2, 2>(2, 0) - expected).cwiseAbs().maxCoeff());
  return r / scale;
}

/// Inverse of quat_pack; rejects matrices off the slice.
inline QuaternionicPoint quat_unpack(const Mat4& w, double tol = 1e-10) {
  if (const double r = slice_residual(w); r > tol)
    throw slice_error("quat_unpack: matrix is off the quaternionic hermitian slice (residual " + std::to_string(r) +
                      ")");
  const cplx z0 = 0.5 * (w(0, 0) + w(1, 1));
  const cplx z2 = 0.5 * (w(2, 2) + w(3, 3));
  return {z0, z2, check_unembed(w.block<2, 2>(0, 2))};
}

/// Member iff Y = Im Z is positive definite: y0 > 0 and y0 y2 > N(y1).
/// The margin is twice the smallest eigenvalue of Y, matching the hermitian case.
inline Membership quat_membership(const QuaternionicPoint& p) {
  const double y0 = p.z0().imag();
  const double y2 = p.z2().imag();
  double ny1 = 0.0;
  for (int k = 2; k < 6; ++k) ny1 += p.coords[static_cast<std::size_t>(k)].imag() * p.coords[static_cast<std::size_t>(k)].imag();
  const bool member = y0 > 0.0 && y0 * y2 - ny1 > 0.0;
  return {member, 2.0 * hermitian_min_eigenvalue(y0, y2, std::sqrt(ny1))};
}

inline double imag_margin(const QuaternionicPoint& p) { return 0.5 * quat_membership(p).margin; }

// ---------------------------------------------------------------------------
// Moebius action

inline constexpr double kSingularityThreshold = 1e-12;

/// (AZ + B)(CZ + D)^{-1} for a complex 2N x 2N matrix M and an N x N matrix Z.
template <int N>
Eigen::Matrix<cplx, N, N> moebius_blocks(const Eigen::Matrix<cplx, 2 * N, 2 * N>& m,
                                         const Eigen::Matrix<cplx, N, N>& z) {
  const auto a = m.template block<N, N>(0, 0);
  const auto b = m.template block<N, N>(0, N);
  const auto c = m.template block<N, N>(N, 0);
  const auto d = m.template block<N, N>(N, N);
  const Eigen::Matrix<cplx, N, N> k = c * z + d;
  if (reciprocal_condition(k) < kSingularityThreshold)
    throw singular_matrix("moebius: CZ+D is numerically singular");
  return (a * z + b) * k.inverse();
}

/// CZ + D for a complex 2N x 2N matrix.
template <int N>
Eigen::Matrix<cplx, N, N> automorphy_block(const Eigen::Matrix<cplx, 2 * N, 2 * N>& m,
                                           const Eigen::Matrix<cplx, N, N>& z) {
  return m.template block<N, N>(N, 0) * z + m.template block<N, N>(N, N);
}

inline HermitianPoint moebius(const Mat4& m, const HermitianPoint& p) {
  HermitianPoint out(moebius_blocks<2>(m, p.z));
  if (!membership_hermitian(out).member)
    throw invalid_element("moebius: image left the hermitian half-plane");
  return out;
}

inline QuaternionicPoint moebius(const Mat8& m, const QuaternionicPoint& p) {
  const Mat4 w = moebius_blocks<4>(m, quat_pack(p));
  QuaternionicPoint out;
  try {
    out = quat_unpack(w, 1e-8);
  } catch (const slice_error&) {
    throw invalid_element("moebius: image left the quaternionic slice");
  }
  if (!quat_membership(out).member)
    throw invalid_element("moebius: image left the quaternionic half-plane");
  return out;
}

// ---------------------------------------------------------------------------
// Involutions

/// Signed permutation x_k -> signs[k] * x_{perm[k]} of four coordinates.
struct SignedPermutation {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> signs{1, 1, 1, 1};

  [[nodiscard]] int minus_signs() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
  }
  /// Member of O'(4,Z): even number of minus signs.
  [[nodiscard]] bool even() const { return minus_signs() % 2 == 0; }

  template <class T>
  std::array<T, 4> apply(const std::array<T, 4>& x) const {
    std::array<T, 4> y{};
    for (std::size_t k = 0; k < 4; ++k) y[k] = static_cast<double>(signs[k]) * x[static_cast<std::size_t>(perm[k])];
    return y;
  }

  /// (s * t)(x) = s(t(x)).
  friend SignedPermutation operator*(const SignedPermutation& s, const SignedPermutation& t) {
    SignedPermutation r;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto pk = static_cast<std::size_t>(s.perm[k]);
      r.perm[k] = t.perm[pk];
      r.signs[k] = s.signs[k] * t.signs[pk];
    }
    return r;
  }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Z -> Z' on the hermitian half-plane.
inline HermitianPoint involution_tau(const HermitianPoint& p) { return p.transposed(); }

/// Z -> Z' on the quaternionic half-plane: the off-diagonal quaternion is
/// conjugated, (z10, z11, z12, z13) -> (z10, -z11, -z12, -z13).
inline QuaternionicPoint involution_tau(const QuaternionicPoint& p) { return {p.z0(), p.z2(), p.z1().conj()}; }

/// Orthogonal action on (z10, z11, z12, z13) fixing z0 and z2. Only elements
/// of O'(4,Z) are accepted.
inline QuaternionicPoint involution_action(const SignedPermutation& s, const QuaternionicPoint& p) {
  if (!s.even()) throw invalid_element("signed permutation has an odd number of minus signs");
  const std::array<cplx, 4> x{p.coords[2], p.coords[3], p.coords[4], p.coords[5]};
  const auto y = s.apply(x);
  return {p.z0(), p.z2(), ComplexQuaternion{y[0], y[1], y[2], y[3]}};
}

}  // namespace hmf
