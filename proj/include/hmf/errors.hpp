#pragma once

#include <stdexcept>
#include <string>

namespace hmf {

/// Base class of every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix that must be inverted is singular to working precision.
struct singular_matrix : error {
  using error::error;
};

/// A candidate group element fails the symplectic relation, or a
/// transformation claimed to lie in a group does not.
struct invalid_element : error {
  using error::error;
};

/// A point lies too close to the boundary of its half-plane for the
/// requested evaluation to be certified.
struct margin_error : error {
  using error::error;
};

/// A 4x4 complex matrix does not lie on the complexified quaternionic
/// hermitian slice.
struct slice_error : error {
  using error::error;
};

/// Evaluation is numerically ill-conditioned at the requested point.
struct ill_conditioned : error {
  using error::error;
};

/// Internal consistency failure; signals a defect, not bad input.
struct consistency_error : error {
  using error::error;
};

}  // namespace hmf
