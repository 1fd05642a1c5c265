#pragma once

#include "hardylab/box.hpp"
#include "hardylab/types.hpp"

namespace hardylab {

/// Element of the truncated Hardy space: one complex Taylor coefficient per
/// box basis monomial, stored in the documented basis order.
struct HardyVector {
  BoxTruncation space;
  Vector coeffs;
};

HardyVector zero_vector(const BoxTruncation& space);
HardyVector basis_vector(const BoxTruncation& space, const MultiIndex& k);

/// sum_k conj(u_k) v_k; conjugate-linear in the first slot.
Complex inner_product(const HardyVector& u, const HardyVector& v);

double norm(const HardyVector& v);

/// Coefficient grid of the splitting H^2(D^n) = H^2(D) (x) H^2(D^{n-1}):
/// entry (k1, q) is the coefficient of z1^k1 (x) z'^{index_at(q)}.  Requires
/// n >= 2.  The relabeling is unitary and tensor_join inverts it exactly.
Matrix tensor_split(const HardyVector& v);
HardyVector tensor_join(const BoxTruncation& space, const Matrix& grid);

}  // namespace hardylab
