#pragma once

// Independent reference computations: finite-difference Jacobians, a direct
// box-sum for theta series, random polynomial forms with exact gradients, and
// the quaternionic congruence action U W conj(U)' computed in quaternion
// arithmetic.

#include <cmath>
#include <functional>
#include <vector>

#include "hmf/arith.hpp"
#include "hmf/brackets.hpp"
#include "hmf/errors.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/harness/sampling.hpp"
#include "hmf/random.hpp"
#include "hmf/theta.hpp"
#include "hmf/types.hpp"

namespace hmf::harness {

// ---------------------------------------------------------------------------
// Finite differences

/// Central-difference Jacobian of a holomorphic map C^N -> C^N. If the map
/// fails at the first step (e.g. leaves the half-plane) the step is halved
/// once; a second failure propagates.
template <int N>
Eigen::Matrix<cplx, N, N> fd_jacobian(
    const std::function<Eigen::Matrix<cplx, N, 1>(const Eigen::Matrix<cplx, N, 1>&)>& map,
    const Eigen::Matrix<cplx, N, 1>& z, double step = 1e-5) {
  auto attempt = [&](double h) {
    Eigen::Matrix<cplx, N, N> jac;
    for (int k = 0; k < N; ++k) {
      Eigen::Matrix<cplx, N, 1> plus = z;
      Eigen::Matrix<cplx, N, 1> minus = z;
      plus(k) += h;
      minus(k) -= h;
      jac.col(k) = (map(plus) - map(minus)) / (2.0 * h);
    }
    return jac;
  };
  try {
    return attempt(step);
  } catch (const error&) {
    return attempt(0.5 * step);
  }
}

inline Vec4 hermitian_coordinates(const HermitianPoint& p) { return flatten(p.z); }

inline HermitianPoint hermitian_from_coordinates(const Vec4& v) {
  Mat2 z;
  z << v(0), v(1), v(2), v(3);
  return HermitianPoint(z);
}

/// Jacobian of Z -> MZ in (z11, z12, z21, z22) coordinates.
template <class Ring>
Mat4 fd_moebius_jacobian(const GroupElement<QuadInt<Ring>>& m, const HermitianPoint& z, double step = 1e-5) {
  return fd_jacobian<4>(
      [&m](const Vec4& v) { return hermitian_coordinates(moebius(m, hermitian_from_coordinates(v))); },
      hermitian_coordinates(z), step);
}

/// Jacobian of Z -> MZ in (z0, z2, z10, z11, z12, z13) coordinates.
inline Mat6 fd_moebius_jacobian(const QuaternionicElement& m, const QuaternionicPoint& z, double step = 1e-5) {
  return fd_jacobian<6>([&m](const Vec6& v) { return moebius(m, QuaternionicPoint::from_vector(v)).as_vector(); },
                        z.as_vector(), step);
}

// ---------------------------------------------------------------------------
// Theta box sum

/// Direct sum over all integer coordinate quadruples in a box containing the
/// ball |v| <= radius, keeping those with |v| <= radius.
inline cplx brute_force_theta(const ThetaCharacteristic& ch, const HermitianPoint& z, double radius) {
  const bool eis = ch.kind == ThetaCase::eisenstein;
  const cplx basis = eis ? cplx(-0.5, std::sqrt(3.0) / 2.0) : cplx(0.0, 1.0);
  Eigen::Vector2cd shift;
  for (int j = 0; j < 2; ++j) {
    const double c = ch.shift[static_cast<std::size_t>(j)];
    shift(j) = eis ? c * cplx(0.0, -1.0 / std::sqrt(3.0)) : 0.5 * c * cplx(1.0, 1.0);
  }
  Eigen::Vector2cd b;
  b << cplx(1.0, 1.0) * static_cast<double>(ch.beta[0]), cplx(1.0, 1.0) * static_cast<double>(ch.beta[1]);
  const double kappa = eis ? 2.0 * pi : pi;
  const int box = static_cast<int>(std::ceil(2.0 * (radius + 1.0))) + 1;
  cplx sum = 0.0;
  for (int m1 = -box; m1 <= box; ++m1)
    for (int n1 = -box; n1 <= box; ++n1) {
      const cplx v1 = static_cast<double>(m1) + static_cast<double>(n1) * basis + shift(0);
      if (std::norm(v1) > radius * radius) continue;
      for (int m2 = -box; m2 <= box; ++m2)
        for (int n2 = -box; n2 <= box; ++n2) {
          Eigen::Vector2cd v;
          v << v1, static_cast<double>(m2) + static_cast<double>(n2) * basis + shift(1);
          if (v.squaredNorm() > radius * radius) continue;
          cplx e = (v.adjoint() * z.z * v)(0, 0);
          if (!eis) e += (b.adjoint() * v)(0, 0).real();
          sum += std::exp(cplx(0.0, kappa) * e);
        }
    }
  return sum;
}

// ---------------------------------------------------------------------------
// Polynomial forms

/// Random polynomial of degree <= max_degree in the N coordinates, with
/// complex coefficients in the unit box; value and gradient are exact.
template <int N>
struct Polynomial {
  struct Monomial {
    cplx coefficient;
    std::array<int, N> exponents{};
  };
  std::vector<Monomial> terms;

  [[nodiscard]] std::pair<cplx, Eigen::Matrix<cplx, N, 1>> jet(const Eigen::Matrix<cplx, N, 1>& x) const {
    cplx value = 0.0;
    Eigen::Matrix<cplx, N, 1> grad = Eigen::Matrix<cplx, N, 1>::Zero();
    for (const auto& t : terms) {
      cplx prod = t.coefficient;
      for (int k = 0; k < N; ++k) prod *= std::pow(x(k), t.exponents[static_cast<std::size_t>(k)]);
      value += prod;
      for (int k = 0; k < N; ++k) {
        const int e = t.exponents[static_cast<std::size_t>(k)];
        if (e == 0) continue;
        cplx d = t.coefficient * static_cast<double>(e) * std::pow(x(k), e - 1);
        for (int l = 0; l < N; ++l)
          if (l != k) d *= std::pow(x(l), t.exponents[static_cast<std::size_t>(l)]);
        grad(k) += d;
      }
    }
    return {value, grad};
  }

  static Polynomial random(Rng& rng, int monomials = 6, int max_degree = 3) {
    Polynomial p;
    p.terms.push_back({random_complex(rng) + 2.0, {}});
    for (int m = 0; m < monomials; ++m) {
      typename Polynomial::Monomial t{random_complex(rng), {}};
      const auto degree = static_cast<int>(rng.integer(1, max_degree));
      for (int d = 0; d < degree; ++d) ++t.exponents[static_cast<std::size_t>(rng.integer(0, N - 1))];
      p.terms.push_back(t);
    }
    return p;
  }
};

inline QuaternionicForm polynomial_form(const Polynomial<6>& p, int weight, const std::string& label) {
  return {label, weight,
          [p](const QuaternionicPoint& z) {
            auto [v, g] = p.jet(z.as_vector());
            return FormJet<QuaternionicPoint>{v, g};
          },
          AutomorphyFactorSpec(weight, CharacterMode::trivial, RepresentationTag::trivial)};
}

inline HermitianForm polynomial_form(const Polynomial<4>& p, int weight, const std::string& label) {
  return {label, weight,
          [p](const HermitianPoint& z) {
            auto [v, g] = p.jet(flatten(z.z));
            Mat2 grad;
            grad << g(0), g(1), g(2), g(3);
            return FormJet<HermitianPoint>{v, grad};
          },
          AutomorphyFactorSpec(weight, CharacterMode::trivial, RepresentationTag::trivial)};
}

// ---------------------------------------------------------------------------
// Quaternionic action on the real form

using QuaternionMatrix = std::array<std::array<ComplexQuaternion, 2>, 2>;

/// U W conj(U)' for 2x2 quaternion matrices.
inline QuaternionMatrix quaternion_congruence(const QuaternionMatrix& u, const QuaternionMatrix& w) {
  QuaternionMatrix uw{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) uw[i][j] = u[i][0] * w[0][j] + u[i][1] * w[1][j];
  QuaternionMatrix out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = uw[i][0] * u[j][0].conj() + uw[i][1] * u[j][1].conj();
  return out;
}

inline Mat4 check_embed_matrix(const QuaternionMatrix& u) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = check_embed(u[i][j]);
  return m;
}

inline QuaternionMatrix as_quaternion_matrix(const QuaternionicPoint& p) {
  return {{{ComplexQuaternion(p.z0()), p.z1()}, {p.z1().conj(), ComplexQuaternion(p.z2())}}};
}

inline Vec6 coordinates_of(const QuaternionMatrix& w) {
  Vec6 v;
  v << w[0][0][0], w[1][1][0], w[0][1][0], w[0][1][1], w[0][1][2], w[0][1][3];
  return v;
}

}  // namespace hmf::harness
