#include "hardylab/linop.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardylab {

LinOp identity_op(const BoxTruncation& space) {
  return {space, space, Matrix::Identity(space.dim(), space.dim()),
          std::vector<int>(space.vars(), 0)};
}

LinOp mult_op(const InnerFunction1D& f, int var, const BoxTruncation& space) {
  if (var < 0 || var >= space.vars()) throw std::out_of_range("mult_op: variable slot out of range");
  const int cap = space.cap(var);
  const Vector coeffs = taylor_coeffs(f, cap).coeffs;
  const Index stride = space.stride(var);
  Matrix mat = Matrix::Zero(space.dim(), space.dim());
  for (Index p = 0; p < space.dim(); ++p) {
    const int k = static_cast<int>((p / stride) % (cap + 1));
    for (int t = 0; t + k <= cap; ++t) {
      if (coeffs(t) != Complex(0.0, 0.0)) mat(p + t * stride, p) += coeffs(t);
    }
  }
  std::vector<int> margins(space.vars(), 0);
  margins[var] = std::min(f.degree(), cap);
  return {space, space, std::move(mat), std::move(margins)};
}

LinOp mult_op(const InnerFunctionProd& f, const BoxTruncation& space, int first_var) {
  if (first_var < 0 || first_var + f.vars() > space.vars())
    throw std::out_of_range("mult_op: product slots out of range");
  LinOp op = identity_op(space);
  for (int i = 0; i < f.vars(); ++i) {
    if (f.factor(i).is_constant() && f.factor(i).constant() == Complex(1.0, 0.0)) continue;
    op = compose(mult_op(f.factor(i), first_var + i, space), op);
  }
  return op;
}

LinOp shift_op(int var, const BoxTruncation& space) {
  return mult_op(InnerFunction1D::monomial(1), var, space);
}

LinOp adjoint(const LinOp& op) {
  return {op.codomain, op.domain, op.mat.adjoint(), std::vector<int>(op.domain.vars(), 0)};
}

LinOp compose(const LinOp& a, const LinOp& b) {
  if (a.domain != b.codomain) throw std::invalid_argument("compose: shape mismatch");
  std::vector<int> margins(a.codomain.vars(), 0);
  for (int i = 0; i < a.codomain.vars(); ++i)
    margins[i] = std::min(a.raise_margins[i] + b.raise_margins[i], a.codomain.cap(i));
  return {b.domain, a.codomain, a.mat * b.mat, std::move(margins)};
}

Matrix kronecker(const Matrix& slow, const Matrix& fast) {
  Matrix out(slow.rows() * fast.rows(), slow.cols() * fast.cols());
  for (Index r = 0; r < slow.rows(); ++r)
    for (Index c = 0; c < slow.cols(); ++c)
      out.block(r * fast.rows(), c * fast.cols(), fast.rows(), fast.cols()) = slow(r, c) * fast;
  return out;
}

}  // namespace hardylab
