#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace spiral {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Default relative tolerance for the colinearity guard (Gram determinant
/// against the product of squared edge norms). Exposed as a knob because
/// "colinear" is otherwise an exact-arithmetic notion.
inline constexpr double kColinearEps = 1e-12;

/// Default relative tolerance for detecting that an operator has reached a
/// fixed point (two successive iterates coincide).
inline constexpr double kFixedPointTol = 1e-13;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a Lyapunov gradient is requested at a point where the
/// underlying scalar function has vanishing derivative but nonzero value.
struct SingularGradient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a surrogate-gradient direction degenerates (probe point
/// coincides with the candidate sphere center).
struct DegenerateGradient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Vec& v) { return v.allFinite(); }

inline void require_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.size() != b.size())
    throw DimensionMismatch(std::string(where) + ": mixed dimensions " +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

}  // namespace spiral
