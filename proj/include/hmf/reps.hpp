#pragma once

// Automorphy representations: St (x) St on 2x2 matrices, the six-dimensional
// representation rho_Jac of GL(4, C) on the quaternionic slice, and the
// Jacobians of the two Moebius actions.

#include <array>
#include <stdexcept>
#include <string>

#include "hmf/arith.hpp"
#include "hmf/errors.hpp"
#include "hmf/groups.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/types.hpp"

namespace hmf {

enum class CharacterMode { det_r, det_half_r, trivial };
enum class RepresentationTag { trivial, st_tensor_st, rho_jac };

struct AutomorphyFactorSpec {
  int weight = 0;
  CharacterMode character = CharacterMode::det_r;
  RepresentationTag representation = RepresentationTag::trivial;

  AutomorphyFactorSpec() = default;
  AutomorphyFactorSpec(int r, CharacterMode chi, RepresentationTag rep) : weight(r), character(chi), representation(rep) {
    if (chi == CharacterMode::det_half_r && r % 2 != 0)
      throw std::invalid_argument("AutomorphyFactorSpec: det^{r/2} needs even weight");
  }
};

/// chi(M) for the given character mode.
inline cplx character_value(const AutomorphyFactorSpec& spec, cplx det_m) {
  switch (spec.character) {
    case CharacterMode::det_r: return std::pow(det_m, spec.weight);
    case CharacterMode::det_half_r: return std::pow(det_m, spec.weight / 2);
    case CharacterMode::trivial: return 1.0;
  }
  return 1.0;
}

/// chi(M) det(CZ+D)^r for the unitary kinds.
template <class Ring>
cplx scalar_automorphy_factor(const AutomorphyFactorSpec& spec, const GroupElement<QuadInt<Ring>>& m,
                              const HermitianPoint& z) {
  return character_value(spec, m.det()) * std::pow(automorphy_block(m, z).determinant(), spec.weight);
}

// ---------------------------------------------------------------------------
// St (x) St

/// (A, B) . W = A W B'.
inline Mat2 apply_st_tensor_st(const Mat2& a, const Mat2& b, const Mat2& w) { return a * w * b.transpose(); }

// ---------------------------------------------------------------------------
// rho_Jac

/// J~ = diag(J2, J2).
inline Mat4 j_tilde() {
  Mat4 j = Mat4::Zero();
  j.block<2, 2>(0, 0) = j2();
  j.block<2, 2>(2, 2) = j2();
  return j;
}

/// Packed image of the k-th coordinate unit vector (z0, z2, z10, z11, z12, z13).
inline Mat4 slice_basis(int k) {
  QuaternionicPoint p;
  p.coords[static_cast<std::size_t>(k)] = 1.0;
  return quat_pack(p);
}

/// Coordinates of a slice matrix, assumed on the slice.
inline Vec6 slice_coordinates(const Mat4& w) {
  Vec6 v;
  v(0) = 0.5 * (w(0, 0) + w(1, 1));
  v(1) = 0.5 * (w(2, 2) + w(3, 3));
  const auto q = check_unembed(w.block<2, 2>(0, 2));
  for (int k = 0; k < 4; ++k) v(2 + k) = q[static_cast<std::size_t>(k)];
  return v;
}

/// The action W -> A W J~ A' J~^{-1} in the slice basis. The slice is the set
/// of W with W J~ antisymmetric, so it is invariant for every A.
inline Mat6 rho_jac(const Mat4& a) {
  const Mat4 jt = j_tilde();
  const Mat4 right = jt * a.transpose() * jt.inverse();
  Mat6 r;
  for (int k = 0; k < 6; ++k) {
    const Mat4 image = a * slice_basis(k) * right;
    if (const double res = slice_residual(image); res > 1e-10)
      throw consistency_error("rho_jac: basis image left the slice (residual " + std::to_string(res) + ")");
    r.col(k) = slice_coordinates(image);
  }
  return r;
}

/// Dimension of the solution space of W J~ + (W J~)' = 0 over Q, by exact
/// elimination on the 16 unknown entries of W.
inline int slice_dimension() {
  // (W J~)_{ab} = sum_c W_{ac} J~_{cb}; J~ has integer entries.
  std::array<std::array<int, 4>, 4> jt{};
  const Mat4 j = j_tilde();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) jt[r][c] = static_cast<int>(std::lround(j(r, c).real()));
  std::vector<std::array<Rational, 16>> rows;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      std::array<Rational, 16> row{};
      for (int c = 0; c < 4; ++c) {
        row[static_cast<std::size_t>(a * 4 + c)] += Rational(jt[c][b]);
        row[static_cast<std::size_t>(b * 4 + c)] += Rational(jt[c][a]);
      }
      rows.push_back(row);
    }
  int rank = 0;
  for (int col = 0; col < 16 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != Rational(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      const Rational f = row[static_cast<std::size_t>(col)] / p[static_cast<std::size_t>(col)];
      if (f == Rational(0)) continue;
      for (std::size_t k = 0; k < 16; ++k) row[k] -= f * p[k];
    }
    ++rank;
  }
  return 16 - rank;
}

// ---------------------------------------------------------------------------
// Jacobians

/// d(MZ) = P dZ Q with P = (conj(C) Z' + conj(D))'^{-1}, Q = (CZ + D)^{-1}.
struct HermitianJacobian {
  Mat2 p;
  Mat2 q;

  [[nodiscard]] Mat2 apply(const Mat2& w) const { return p * w * q; }
  /// Row-major (z11, z12, z21, z22) matrix; entry ((a,b),(c,d)) = P_ac Q_db.
  [[nodiscard]] Mat4 flat() const {
    Mat4 f;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) f(2 * a + b, 2 * c + d) = p(a, c) * q(d, b);
    return f;
  }
  [[nodiscard]] cplx det() const { return flat().determinant(); }
};

template <class Ring>
HermitianJacobian jac_hermitian(const GroupElement<QuadInt<Ring>>& m, const HermitianPoint& z) {
  const Mat2 k = automorphy_block(m, z);
  const Mat2 kbar = conjugate_automorphy_block(m, z);
  if (reciprocal_condition(k) < kSingularityThreshold || reciprocal_condition(kbar) < kSingularityThreshold)
    throw singular_matrix("jac_hermitian: CZ+D is numerically singular");
  return {kbar.transpose().inverse(), k.inverse()};
}

/// J~ K' J~^{-1}: the holomorphic extension of the quaternionic conjugate transpose.
inline Mat4 quaternionic_adjoint(const Mat4& k) {
  const Mat4 jt = j_tilde();
  return jt * k.transpose() * jt.inverse();
}

/// Jacobian of Z -> (AZ+B)(CZ+D)^{-1} in the slice coordinates. With
/// K = C^ Z^ + D^ one has d(MZ) = K*^{-1} dZ K^{-1} = rho_jac(K*)^{-1} dZ.
/// Its determinant is det(K)^{-3}.
inline Mat6 jac_quaternionic(const QuaternionicElement& m, const QuaternionicPoint& z) {
  const Mat4 k = automorphy_block(m, z);
  if (reciprocal_condition(k) < kSingularityThreshold)
    throw singular_matrix("jac_quaternionic: C^Z^+D^ is numerically singular");
  return rho_jac(quaternionic_adjoint(k)).inverse();
}

/// rho_jac(C^ Z^ + D^)^{-1} without the adjoint. Same determinant as
/// jac_quaternionic, but a different linear map unless K* = K.
inline Mat6 jac_quaternionic_unadjoined(const QuaternionicElement& m, const QuaternionicPoint& z) {
  const Mat4 k = automorphy_block(m, z);
  if (reciprocal_condition(k) < kSingularityThreshold)
    throw singular_matrix("jac_quaternionic: C^Z^+D^ is numerically singular");
  return rho_jac(k).inverse();
}

}  // namespace hmf
