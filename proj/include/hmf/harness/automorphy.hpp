#pragma once

// Residuals of transformation laws f(MZ) = J(M, Z) f(Z).

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hmf/brackets.hpp"
#include "hmf/groups.hpp"
#include "hmf/reps.hpp"

namespace hmf::harness {

struct AutomorphyResidual {
  /// |f(MZ) - J(M,Z) f(Z)| / max(1, |f(MZ)|).
  double residual = 0.0;
  bool pass = false;
};

/// Scalar law f(MZ) = chi(M) det(CZ+D)^r f(Z) with chi and r from `spec`.
template <class Ring>
AutomorphyResidual check_automorphy(const std::function<cplx(const HermitianPoint&)>& f,
                                    const AutomorphyFactorSpec& spec, const GroupElement<QuadInt<Ring>>& m,
                                    const HermitianPoint& z, double tol) {
  if (spec.representation != RepresentationTag::trivial)
    throw std::invalid_argument("check_automorphy: scalar form needs the trivial representation");
  const cplx image = f(moebius(m, z));
  const cplx expected = scalar_automorphy_factor(spec, m, z) * f(z);
  const double r = std::abs(image - expected) / std::max(1.0, std::abs(image));
  return {r, r <= tol};
}

template <class Ring>
AutomorphyResidual check_automorphy(const HermitianForm& form, const GroupElement<QuadInt<Ring>>& m,
                                    const HermitianPoint& z, double tol) {
  return check_automorphy<Ring>([&form](const HermitianPoint& p) { return form.value(p); }, form.character, m, z,
                                tol);
}

/// St (x) St law f(MZ) = chi(M) det(CZ+D)^r (CZ+D) f(Z) (conj(C) Z' + conj(D))'.
template <class Ring>
AutomorphyResidual check_automorphy(const std::function<Mat2(const HermitianPoint&)>& f,
                                    const AutomorphyFactorSpec& spec, const GroupElement<QuadInt<Ring>>& m,
                                    const HermitianPoint& z, double tol) {
  if (spec.representation != RepresentationTag::st_tensor_st)
    throw std::invalid_argument("check_automorphy: matrix form needs the St (x) St representation");
  const Mat2 image = f(moebius(m, z));
  const Mat2 k = automorphy_block(m, z);
  const Mat2 kbar = conjugate_automorphy_block(m, z);
  const Mat2 expected = scalar_automorphy_factor(spec, m, z) * apply_st_tensor_st(k, kbar, f(z));
  const double r = (image - expected).norm() / std::max(1.0, image.norm());
  return {r, r <= tol};
}

}  // namespace hmf::harness
