#pragma once

// Random points, matrices and (element, point) pairs for the verification suite.

#include <cmath>
#include <optional>
#include <stdexcept>

#include "hmf/groups.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/random.hpp"
#include "hmf/types.hpp"

namespace hmf::harness {

struct PointSampling {
  /// Range for the eigenvalues of Im Z.
  double min_eigenvalue = 0.4;
  double max_eigenvalue = 1.2;
  /// Entries of Re Z lie in [-x_bound, x_bound].
  double x_bound = 1.0;
};

inline cplx random_complex(Rng& rng, double bound = 1.0) {
  return {rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
}

template <int R, int C>
Eigen::Matrix<cplx, R, C> random_matrix(Rng& rng, double bound = 1.0) {
  Eigen::Matrix<cplx, R, C> m;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) m(i, j) = random_complex(rng, bound);
  return m;
}

/// Haar-like random element of SU(2).
inline Mat2 random_su2(Rng& rng) {
  const double t = rng.uniform(0.0, 0.5 * pi);
  const double a = rng.uniform(0.0, 2.0 * pi);
  const double b = rng.uniform(0.0, 2.0 * pi);
  Mat2 u;
  u << std::cos(t) * std::exp(I * a), -std::sin(t) * std::exp(I * b), std::sin(t) * std::exp(-I * b),
      std::cos(t) * std::exp(-I * a);
  return u;
}

/// Z = X + iY with X hermitian, entries in [-1, 1], and Y = U diag(l1, l2) U*.
inline HermitianPoint random_hermitian_point(Rng& rng, const PointSampling& s = {}) {
  Mat2 x;
  x(0, 0) = rng.uniform(-s.x_bound, s.x_bound);
  x(1, 1) = rng.uniform(-s.x_bound, s.x_bound);
  x(0, 1) = random_complex(rng, s.x_bound);
  x(1, 0) = std::conj(x(0, 1));
  const Mat2 u = random_su2(rng);
  Mat2 d = Mat2::Zero();
  d(0, 0) = rng.uniform(s.min_eigenvalue, s.max_eigenvalue);
  d(1, 1) = rng.uniform(s.min_eigenvalue, s.max_eigenvalue);
  return HermitianPoint(x + I * (u * d * u.adjoint()));
}

inline ComplexQuaternion random_unit_direction(Rng& rng) {
  for (;;) {
    std::array<double, 4> v{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    if (n > 1e-3) return {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
  }
}

/// Quaternionic Y = [[y0, y1], [conj(y1), y2]] has eigenvalues
/// (y0+y2)/2 +- sqrt(((y0-y2)/2)^2 + N(y1)); both are drawn from the range.
inline QuaternionicPoint random_quaternionic_point(Rng& rng, const PointSampling& s = {}) {
  const double l1 = rng.uniform(s.min_eigenvalue, s.max_eigenvalue);
  const double l2 = rng.uniform(s.min_eigenvalue, s.max_eigenvalue);
  const double theta = rng.uniform(0.0, pi);
  const double mean = 0.5 * (l1 + l2);
  const double half = 0.5 * (l1 - l2);
  const double y0 = mean + half * std::cos(theta);
  const double y2 = mean - half * std::cos(theta);
  const ComplexQuaternion dir = random_unit_direction(rng);
  const double r = std::abs(half * std::sin(theta));
  QuaternionicPoint p;
  p.coords[0] = {rng.uniform(-s.x_bound, s.x_bound), y0};
  p.coords[1] = {rng.uniform(-s.x_bound, s.x_bound), y2};
  for (std::size_t k = 0; k < 4; ++k) p.coords[2 + k] = {rng.uniform(-s.x_bound, s.x_bound), r * dir[k].real()};
  return p;
}

/// Upper unitriangular 4x4 matrix with random entries above the diagonal.
inline Mat4 random_unipotent(Rng& rng, double bound = 2.0) {
  Mat4 a = Mat4::Identity();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) a(i, j) = random_complex(rng, bound);
  return a;
}

/// Random real quaternion with coefficients in [-bound, bound].
inline ComplexQuaternion random_real_quaternion(Rng& rng, double bound = 1.0) {
  return {rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound),
          rng.uniform(-bound, bound)};
}

template <class Entry>
struct ActionSample {
  GroupElement<Entry> m;
  typename GroupElement<Entry>::Point z;
  typename GroupElement<Entry>::Point image;
};

inline HermitianPoint random_point_for(Rng& rng, const HermitianPoint*, const PointSampling& s) {
  return random_hermitian_point(rng, s);
}
inline QuaternionicPoint random_point_for(Rng& rng, const QuaternionicPoint*, const PointSampling& s) {
  return random_quaternionic_point(rng, s);
}

/// Draws Z until MZ is defined and both Z and MZ have Im-margin at least
/// `min_margin`; returns nullopt after `attempts` failures.
template <class Entry>
std::optional<ActionSample<Entry>> sample_point_for(const GroupElement<Entry>& m, Rng& rng, double min_margin,
                                                    int attempts = 64, const PointSampling& s = {}) {
  using Point = typename GroupElement<Entry>::Point;
  for (int k = 0; k < attempts; ++k) {
    const Point z = random_point_for(rng, static_cast<const Point*>(nullptr), s);
    if (imag_margin(z) < min_margin) continue;
    try {
      const Point w = moebius(m, z);
      if (imag_margin(w) >= min_margin) return ActionSample<Entry>{m, z, w};
    } catch (const error&) {
    }
  }
  return std::nullopt;
}

/// Congruence element together with `points` admissible points.
template <class Entry>
std::vector<ActionSample<Entry>> congruence_action_samples(Level level, Rng& rng, int points, double min_margin) {
  for (;;) {
    const auto m = congruence_sample<Entry>(level, rng.next());
    std::vector<ActionSample<Entry>> out;
    for (int k = 0; k < points; ++k) {
      auto s = sample_point_for(m, rng, min_margin);
      if (!s) break;
      out.push_back(*s);
    }
    if (static_cast<int>(out.size()) == points) return out;
  }
}

}  // namespace hmf::harness
