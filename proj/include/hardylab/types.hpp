#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hardylab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Eigen::Index;

// Default numerical knobs; scenario files may override them per run.
inline constexpr double kRankTol = 1e-9;         // relative SVD cutoff for rank decisions
inline constexpr double kResidualTol = 1e-8;     // "holds" threshold for operator residuals
inline constexpr double kIdentityTol = 1e-10;    // projection-identity comparisons
inline constexpr double kUnimodularTol = 1e-12;  // tolerance on |c| = 1 for inner constants
inline constexpr double kZeroRadiusCap = 1.0 - 1e-9;  // zeros must satisfy |a| <= this

}  // namespace hardylab
