#pragma once

#include "hardylab/inner_function.hpp"
#include "hardylab/linop.hpp"
#include "hardylab/projections.hpp"
#include "hardylab/subspace.hpp"

namespace hardylab {

/// Block inner multiplier Theta(z) = sum_j phi_j(z) P_j: a chain of inner
/// functions in the leading variables paired one-to-one with a projection
/// family on the remaining variables.
struct ThetaMultiplier {
  InnerSeq seq;             // terms on variables 0 .. k-1
  ProjectionFamily family;  // on variables k .. n-1

  int term_vars() const { return seq.vars(); }
};

/// Largest per-variable degree among the terms (the mask margin needed for
/// exact isometry on monomial data).
std::vector<int> theta_term_margins(const ThetaMultiplier& theta);

/// Operator sum_j M_{phi_j} (x) P_j on the full box.  Lengths must match.
/// Terms whose degree exceeds a cap still build, but the usable interior may
/// be empty; callers report that, nothing is silently truncated.
LinOp build_theta(const ThetaMultiplier& theta, const BoxTruncation& full_box);

struct IsometryResult {
  bool holds = false;
  double residual = 0.0;
};

/// residual = || (Theta^H Theta - I)(mask, mask) ||_2.  Exactly zero for
/// all-monomial terms with partition families once the mask margin in each
/// term variable reaches the term degree.
IsometryResult check_isometry(const LinOp& theta_op, const InteriorMask& mask, double tol);

/// Orthonormalized column span of the Theta matrix.
Subspace range_subspace(const LinOp& theta_op, double tau_rank = kRankTol);

}  // namespace hardylab
