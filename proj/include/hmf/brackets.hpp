#pragma once

// Weighted scalar forms and their brackets
//   {f, g} = wt(g) g grad f - wt(f) f grad g,
// the three-term rule, bracket determinants and the column-reduction identity
// for seven forms on the quaternionic half-plane.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hmf/errors.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/reps.hpp"
#include "hmf/theta.hpp"
#include "hmf/types.hpp"

namespace hmf {

template <class Point>
struct gradient_of;
template <>
struct gradient_of<HermitianPoint> {
  using type = Mat2;
};
template <>
struct gradient_of<QuaternionicPoint> {
  using type = Vec6;
};

template <class Point>
using gradient_t = typename gradient_of<Point>::type;

template <class Point>
struct FormJet {
  cplx value{0.0, 0.0};
  gradient_t<Point> gradient = gradient_t<Point>::Zero();
};

/// A scalar form with its weight, character and a combined value/gradient evaluator.
template <class Point>
struct WeightedForm {
  using Jet = FormJet<Point>;
  std::string label;
  int weight = 1;
  std::function<Jet(const Point&)> jet;
  AutomorphyFactorSpec character;

  [[nodiscard]] cplx value(const Point& z) const { return jet(z).value; }
  [[nodiscard]] gradient_t<Point> gradient(const Point& z) const { return jet(z).gradient; }
};

using HermitianForm = WeightedForm<HermitianPoint>;
using QuaternionicForm = WeightedForm<QuaternionicPoint>;

/// Weight-1 theta constant with character det.
inline HermitianForm theta_form(const ThetaCharacteristic& ch, const TruncationPolicy& policy = {}) {
  return {ch.label(), 1,
          [ch, policy](const HermitianPoint& z) {
            const auto t = theta_jet(ch, z, policy, true);
            return FormJet<HermitianPoint>{t.value, t.gradient};
          },
          AutomorphyFactorSpec(1, CharacterMode::det_r, RepresentationTag::trivial)};
}

/// f^n with weight n wt(f).
template <class Point>
WeightedForm<Point> power(const WeightedForm<Point>& f, int n) {
  if (n < 1) throw std::invalid_argument("power: exponent must be positive");
  auto inner = f.jet;
  WeightedForm<Point> out{f.label + "^" + std::to_string(n), f.weight * n,
                          [inner, n](const Point& z) {
                            const auto j = inner(z);
                            const cplx vn1 = std::pow(j.value, n - 1);
                            return FormJet<Point>{vn1 * j.value, static_cast<double>(n) * vn1 * j.gradient};
                          },
                          f.character};
  out.character.weight = out.weight;
  return out;
}

/// Theta[m]^2: weight 2, character det^{r/2}.
inline HermitianForm theta_square_form(const ThetaCharacteristic& ch, const TruncationPolicy& policy = {}) {
  auto f = power(theta_form(ch, policy), 2);
  f.character = AutomorphyFactorSpec(2, CharacterMode::det_half_r, RepresentationTag::trivial);
  return f;
}

// ---------------------------------------------------------------------------
// Brackets

template <class Gradient>
Gradient bracket(int wf, const cplx& f, const Gradient& df, int wg, const cplx& g, const Gradient& dg) {
  return (static_cast<double>(wg) * g) * df - (static_cast<double>(wf) * f) * dg;
}

template <class Point>
gradient_t<Point> bracket(const WeightedForm<Point>& f, const WeightedForm<Point>& g, const Point& z) {
  const auto jf = f.jet(z);
  const auto jg = g.jet(z);
  return bracket(f.weight, jf.value, jf.gradient, g.weight, jg.value, jg.gradient);
}

struct ThreeTermResult {
  double residual = 0.0;
  bool degenerate = false;
};

/// | wt(h) h {f,g} - wt(g) g {f,h} - wt(f) f {h,g} | / largest term norm.
template <class Gradient>
ThreeTermResult three_term_residual(int wf, const cplx& f, const Gradient& df, int wg, const cplx& g,
                                    const Gradient& dg, int wh, const cplx& h, const Gradient& dh) {
  const Gradient t1 = (static_cast<double>(wh) * h) * bracket(wf, f, df, wg, g, dg);
  const Gradient t2 = (static_cast<double>(wg) * g) * bracket(wf, f, df, wh, h, dh);
  const Gradient t3 = (static_cast<double>(wf) * f) * bracket(wh, h, dh, wg, g, dg);
  const double scale = std::max({t1.norm(), t2.norm(), t3.norm()});
  if (scale < 1e-12) return {0.0, true};
  return {(t1 - t2 - t3).norm() / scale, false};
}

template <class Point>
ThreeTermResult three_term_residual(const WeightedForm<Point>& f, const WeightedForm<Point>& g,
                                    const WeightedForm<Point>& h, const Point& z) {
  const auto jf = f.jet(z);
  const auto jg = g.jet(z);
  const auto jh = h.jet(z);
  return three_term_residual(f.weight, jf.value, jf.gradient, g.weight, jg.value, jg.gradient, h.weight, jh.value,
                             jh.gradient);
}

/// Row-major (z11, z12, z21, z22).
inline Vec4 flatten(const Mat2& g) { return Vec4(g(0, 0), g(0, 1), g(1, 0), g(1, 1)); }

/// det of the 4x4 matrix whose columns are the flattened brackets
/// {family[pivot], family[k]}, k != pivot, in family order.
inline cplx bracket_det(const std::vector<HermitianForm>& family, std::size_t pivot, const HermitianPoint& z) {
  if (family.size() != 5) throw std::invalid_argument("bracket_det: family must have exactly 5 forms");
  if (pivot >= family.size()) throw std::invalid_argument("bracket_det: pivot out of range");
  std::vector<FormJet<HermitianPoint>> jets;
  jets.reserve(family.size());
  for (const auto& f : family) jets.push_back(f.jet(z));
  Mat4 m;
  int col = 0;
  const auto& p = jets[pivot];
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k == pivot) continue;
    m.col(col++) = flatten(bracket(family[pivot].weight, p.value, p.gradient, family[k].weight, jets[k].value,
                                   jets[k].gradient));
  }
  return m.determinant();
}

struct ReductionIdentity {
  /// (wt(f1) f1)^5 det [[wt f_k ...], [grad ...]] and det({f1, f_k} ... {f1, g}).
  cplx lhs;
  cplx rhs;
  double residual;
};

/// Column reduction with the first column: for weight-1 f1 this is
/// f1^5 det(7x7) = det({f1,f2}, ..., {f1,f6}, {f1,g}).
inline ReductionIdentity reduction_identity(const std::vector<QuaternionicForm>& forms, const QuaternionicPoint& z) {
  if (forms.size() != 7) throw std::invalid_argument("reduction_identity: need f1..f6 and g");
  std::vector<FormJet<QuaternionicPoint>> jets;
  jets.reserve(7);
  for (const auto& f : forms) jets.push_back(f.jet(z));
  const cplx f1 = jets[0].value;
  if (std::abs(f1) < 1e-6) throw ill_conditioned("reduction_identity: |f1(Z)| < 1e-6");

  Mat7 big;
  for (int k = 0; k < 7; ++k) {
    big(0, k) = static_cast<double>(forms[static_cast<std::size_t>(k)].weight) * jets[static_cast<std::size_t>(k)].value;
    big.block<6, 1>(1, k) = jets[static_cast<std::size_t>(k)].gradient;
  }
  Mat6 small;
  for (int k = 1; k < 7; ++k) {
    const auto& j = jets[static_cast<std::size_t>(k)];
    small.col(k - 1) = bracket(forms[0].weight, f1, jets[0].gradient, forms[static_cast<std::size_t>(k)].weight,
                               j.value, j.gradient);
  }
  const cplx lhs = std::pow(static_cast<double>(forms[0].weight) * f1, 5) * big.determinant();
  const cplx rhs = small.determinant();
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return {lhs, rhs, scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale};
}

inline double reduction_identity_residual(const std::vector<QuaternionicForm>& forms, const QuaternionicPoint& z) {
  return reduction_identity(forms, z).residual;
}

}  // namespace hmf
