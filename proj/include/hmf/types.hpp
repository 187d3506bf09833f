#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hmf {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double pi = 3.14159265358979323846;

using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Mat6 = Eigen::Matrix<cplx, 6, 6>;
using Mat7 = Eigen::Matrix<cplx, 7, 7>;
using Mat8 = Eigen::Matrix<cplx, 8, 8>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;
using Vec6 = Eigen::Matrix<cplx, 6, 1>;

// Reciprocal condition estimate in the 1-norm.
template <class Derived>
double reciprocal_condition(const Eigen::MatrixBase<Derived>& m) {
  auto lu = m.fullPivLu();
  if (!lu.isInvertible()) return 0.0;
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  const double inv_norm = lu.inverse().cwiseAbs().colwise().sum().maxCoeff();
  if (norm == 0.0 || inv_norm == 0.0) return 0.0;
  return 1.0 / (norm * inv_norm);
}

}  // namespace hmf
