#pragma once

// Theta constants on the hermitian half-plane of degree 2:
//   Eisenstein  Theta_p(Z) = sum_{g in Z[omega]^2} e(2 pi i conj(g+p)' Z (g+p)),
//               sqrt(-3) p in {(0,0), (1,0), (0,1), (1,1), (1,-1)};
//   Gauss       Theta[m](Z) = sum_{g in Z[i]^2} e(pi i (conj(h)' Z h + <b, h>)),
//               h = g + a/2, a = (1+i) alpha, b = (1+i) beta, alpha' beta even,
//               <b, h> = Re(conj(b)' h).
// Values and gradients are truncated lattice sums whose truncation radius is
// chosen from an explicit bound on the neglected tail.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmf/errors.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/types.hpp"

namespace hmf {

enum class ThetaCase { eisenstein, gauss };

inline const char* to_string(ThetaCase c) { return c == ThetaCase::eisenstein ? "eisenstein" : "gauss"; }

inline ThetaCase parse_theta_case(const std::string& s) {
  if (s == "eisenstein") return ThetaCase::eisenstein;
  if (s == "gauss") return ThetaCase::gauss;
  throw std::invalid_argument("unknown theta case '" + s + "'");
}

struct ThetaCharacteristic {
  ThetaCase kind = ThetaCase::eisenstein;
  /// Eisenstein: sqrt(-3) p. Gauss: alpha.
  std::array<int, 2> shift{0, 0};
  /// Gauss only.
  std::array<int, 2> beta{0, 0};

  [[nodiscard]] std::string label() const {
    std::ostringstream os;
    if (kind == ThetaCase::eisenstein) {
      os << "Theta_p[sqrt(-3)p=(" << shift[0] << "," << shift[1] << ")]";
    } else {
      os << "Theta[" << shift[0] << shift[1] << beta[0] << beta[1] << "]";
    }
    return os.str();
  }
  friend bool operator==(const ThetaCharacteristic&, const ThetaCharacteristic&) = default;
};

inline ThetaCharacteristic eisenstein_characteristic(int c1, int c2) {
  static constexpr std::array<std::array<int, 2>, 5> allowed{{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, -1}}};
  const std::array<int, 2> c{c1, c2};
  if (std::find(allowed.begin(), allowed.end(), c) == allowed.end())
    throw std::invalid_argument("eisenstein_characteristic: not one of the five listed shifts");
  return {ThetaCase::eisenstein, c, {0, 0}};
}

inline ThetaCharacteristic gauss_characteristic(std::array<int, 2> alpha, std::array<int, 2> beta) {
  for (int x : {alpha[0], alpha[1], beta[0], beta[1]})
    if (x != 0 && x != 1) throw std::invalid_argument("gauss_characteristic: entries must be 0 or 1");
  if ((alpha[0] * beta[0] + alpha[1] * beta[1]) % 2 != 0)
    throw std::invalid_argument("gauss_characteristic: alpha' beta must be even");
  return {ThetaCase::gauss, alpha, beta};
}

/// Eisenstein: the five characteristics Theta_1..Theta_5 in order.
/// Gauss: the ten admissible (alpha, beta), lexicographic in (a1, a2, b1, b2).
inline std::vector<ThetaCharacteristic> characteristic_table(ThetaCase kind) {
  std::vector<ThetaCharacteristic> out;
  if (kind == ThetaCase::eisenstein) {
    for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, -1}}) out.push_back(eisenstein_characteristic(a, b));
    return out;
  }
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
          if ((a1 * b1 + a2 * b2) % 2 == 0) out.push_back(gauss_characteristic({a1, a2}, {b1, b2}));
  return out;
}

/// Theta(1)..Theta(5): columns (alpha1, alpha2, beta1, beta2) of
/// [[1,0,1,0,1],[1,0,0,0,1],[0,1,0,0,1],[0,1,0,0,1]].
inline std::vector<ThetaCharacteristic> gauss_generators() {
  return {gauss_characteristic({1, 1}, {0, 0}), gauss_characteristic({0, 0}, {1, 1}),
          gauss_characteristic({1, 0}, {0, 0}), gauss_characteristic({0, 0}, {0, 0}),
          gauss_characteristic({1, 1}, {1, 1})};
}

struct TruncationPolicy {
  /// Absolute bound on the neglected tail of the value (and of each gradient entry).
  double tail_bound = 1e-12;
  double max_radius = 14.0;
  /// Smallest accepted eigenvalue of Im Z.
  double min_margin = 0.4;
};

struct ThetaJet {
  cplx value{0.0, 0.0};
  Mat2 gradient = Mat2::Zero();
  double radius = 0.0;
  /// Certified bounds on |value - truncated value| and on each gradient entry.
  double value_tail = 0.0;
  double gradient_tail = 0.0;
};

namespace detail {

inline double exponent_scale(ThetaCase kind) { return kind == ThetaCase::eisenstein ? 2.0 * pi : pi; }

/// Upper bound for sum over |v| > R of |term| (with_gradient: of |term| * kappa |v|^2).
/// Shell k has at most (2(R+k)+3)^4 points, since each component lattice has
/// minimal distance 1, and each term is at most exp(-kappa lambda (R+k)^2).
inline double tail_estimate(double kappa, double lambda, double radius, bool with_gradient) {
  double total = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double r = radius + k;
    const double count = std::pow(2.0 * r + 3.0, 4);
    double term = count * std::exp(-kappa * lambda * r * r);
    if (with_gradient) term *= kappa * (r + 1.0) * (r + 1.0);
    total += term;
    if (r > radius + 1.0 && term < 1e-40) break;
  }
  return total;
}

struct ComponentPoint {
  cplx v;
  double norm2;
  /// Gauss linear-term contribution beta_j (Re v + Im v).
  double linear;
};

/// Points of the shifted component lattice with |v| <= radius, sorted by |v|^2.
inline std::vector<ComponentPoint> component_points(const ThetaCharacteristic& ch, int j, double radius) {
  std::vector<ComponentPoint> out;
  cplx basis;
  cplx shift;
  if (ch.kind == ThetaCase::eisenstein) {
    basis = cplx(-0.5, std::sqrt(3.0) / 2.0);
    shift = static_cast<double>(ch.shift[static_cast<std::size_t>(j)]) / cplx(0.0, std::sqrt(3.0));
  } else {
    basis = cplx(0.0, 1.0);
    shift = 0.5 * static_cast<double>(ch.shift[static_cast<std::size_t>(j)]) * cplx(1.0, 1.0);
  }
  const double beta = static_cast<double>(ch.beta[static_cast<std::size_t>(j)]);
  // |m + n basis| >= (sqrt(3)/2) max(|m|, |n|) for both bases.
  const auto box = static_cast<int>(std::ceil((radius + std::abs(shift)) * 2.0 / std::sqrt(3.0))) + 1;
  const double r2 = radius * radius;
  for (int m = -box; m <= box; ++m)
    for (int n = -box; n <= box; ++n) {
      const cplx v = static_cast<double>(m) + static_cast<double>(n) * basis + shift;
      const double nv = std::norm(v);
      if (nv <= r2) out.push_back({v, nv, beta * (v.real() + v.imag())});
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const ComponentPoint& a, const ComponentPoint& b) { return a.norm2 < b.norm2; });
  return out;
}

}  // namespace detail

/// Truncated sum over lattice vectors with |v| <= radius; no tail certification.
inline ThetaJet theta_at_radius(const ThetaCharacteristic& ch, const HermitianPoint& z, double radius,
                                bool with_gradient = true) {
  const double kappa = detail::exponent_scale(ch.kind);
  const auto first = detail::component_points(ch, 0, radius);
  const auto second = detail::component_points(ch, 1, radius);
  const cplx ki(0.0, kappa);
  const cplx z11 = z.z(0, 0), z12 = z.z(0, 1), z21 = z.z(1, 0), z22 = z.z(1, 1);
  const double r2 = radius * radius;
  const bool gauss = ch.kind == ThetaCase::gauss;

  ThetaJet jet;
  jet.radius = radius;
  cplx g11 = 0.0, g12 = 0.0, g21 = 0.0, g22 = 0.0;
  for (const auto& p : first) {
    if (p.norm2 > r2) break;
    const cplx a11 = p.norm2 * z11;
    for (const auto& q : second) {
      if (p.norm2 + q.norm2 > r2) break;
      const cplx c12 = std::conj(p.v) * q.v;
      const cplx c21 = std::conj(c12);
      cplx exponent = ki * (a11 + c12 * z12 + c21 * z21 + q.norm2 * z22);
      if (gauss) exponent += ki * (p.linear + q.linear);
      const cplx term = std::exp(exponent);
      jet.value += term;
      if (with_gradient) {
        g11 += p.norm2 * term;
        g12 += c12 * term;
        g21 += c21 * term;
        g22 += q.norm2 * term;
      }
    }
  }
  if (with_gradient) jet.gradient << ki * g11, ki * g12, ki * g21, ki * g22;
  return jet;
}

/// Smallest radius (step 0.25, at least 1) whose certified tail is below the
/// policy target; throws margin_error if Im Z is too small or no radius up to
/// the policy maximum suffices.
inline double certified_radius(ThetaCase kind, const HermitianPoint& z, const TruncationPolicy& policy,
                               bool with_gradient) {
  const double lambda = imag_margin(z);
  if (!(lambda >= policy.min_margin))
    throw margin_error("theta: Im Z margin " + std::to_string(lambda) + " below policy minimum " +
                       std::to_string(policy.min_margin));
  const double kappa = detail::exponent_scale(kind);
  for (double r = 1.0; r <= policy.max_radius + 1e-12; r += 0.25) {
    const bool ok = detail::tail_estimate(kappa, lambda, r, false) <= policy.tail_bound &&
                    (!with_gradient || detail::tail_estimate(kappa, lambda, r, true) <= policy.tail_bound);
    if (ok) return r;
  }
  throw margin_error("theta: tail bound " + std::to_string(policy.tail_bound) + " not reachable within radius " +
                     std::to_string(policy.max_radius));
}

/// Value and gradient in one pass, with certified truncation.
inline ThetaJet theta_jet(const ThetaCharacteristic& ch, const HermitianPoint& z,
                          const TruncationPolicy& policy = {}, bool with_gradient = true) {
  const double r = certified_radius(ch.kind, z, policy, with_gradient);
  ThetaJet jet = theta_at_radius(ch, z, r, with_gradient);
  const double kappa = detail::exponent_scale(ch.kind);
  const double lambda = imag_margin(z);
  jet.value_tail = detail::tail_estimate(kappa, lambda, r, false);
  if (with_gradient) jet.gradient_tail = detail::tail_estimate(kappa, lambda, r, true);
  return jet;
}

inline cplx theta_eval(const ThetaCharacteristic& ch, const HermitianPoint& z, const TruncationPolicy& policy = {}) {
  return theta_jet(ch, z, policy, false).value;
}

/// Entry (j, k) is the derivative with respect to z_jk.
inline Mat2 theta_gradient(const ThetaCharacteristic& ch, const HermitianPoint& z,
                           const TruncationPolicy& policy = {}) {
  return theta_jet(ch, z, policy, true).gradient;
}

/// Product of the ten Gauss theta series.
inline cplx phi10(const HermitianPoint& z, const TruncationPolicy& policy = {}) {
  cplx prod = 1.0;
  for (const auto& ch : characteristic_table(ThetaCase::gauss)) prod *= theta_eval(ch, z, policy);
  return prod;
}

}  // namespace hmf
