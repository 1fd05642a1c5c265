#pragma once

#include <vector>

#include "hardylab/box.hpp"
#include "hardylab/inner_function.hpp"
#include "hardylab/types.hpp"

namespace hardylab {

/// Dense operator between two box truncations, together with the number of
/// degrees it can raise each variable by (capped at the codomain cap).  The
/// raise margins drive the default interior masks of the residual checks.
struct LinOp {
  BoxTruncation domain;
  BoxTruncation codomain;
  Matrix mat;
  std::vector<int> raise_margins;
};

LinOp identity_op(const BoxTruncation& space);

/// Multiplication by a one-variable inner function acting on the given slot:
/// lower-triangular Toeplitz in that slot, identity elsewhere.  Taylor
/// coefficients are taken through the slot's cap.
LinOp mult_op(const InnerFunction1D& f, int var, const BoxTruncation& space);

/// Multiplication by a coordinate-product inner function on the sub-box of
/// variables first_var .. first_var + f.vars() - 1.
LinOp mult_op(const InnerFunctionProd& f, const BoxTruncation& space, int first_var = 0);

/// Multiplication by the coordinate z_var.
LinOp shift_op(int var, const BoxTruncation& space);

/// Conjugate transpose; raising margins reset to zero.
LinOp adjoint(const LinOp& op);

/// a after b (matrix product a.mat * b.mat); margins add.
LinOp compose(const LinOp& a, const LinOp& b);

/// Kronecker product with the first factor indexing the slower variable
/// block, matching position(k) = p_head + head_dim * p_tail.
Matrix kronecker(const Matrix& slow, const Matrix& fast);

}  // namespace hardylab
