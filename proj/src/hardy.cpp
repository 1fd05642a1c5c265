#include "hardylab/hardy.hpp"

#include <stdexcept>

namespace hardylab {

HardyVector zero_vector(const BoxTruncation& space) {
  return {space, Vector::Zero(space.dim())};
}

HardyVector basis_vector(const BoxTruncation& space, const MultiIndex& k) {
  HardyVector v = zero_vector(space);
  v.coeffs(space.position(k)) = Complex(1.0, 0.0);
  return v;
}

Complex inner_product(const HardyVector& u, const HardyVector& v) {
  if (u.space != v.space) throw std::invalid_argument("inner_product: space mismatch");
  return u.coeffs.dot(v.coeffs);  // Eigen's dot conjugates the first argument
}

double norm(const HardyVector& v) { return v.coeffs.norm(); }

Matrix tensor_split(const HardyVector& v) {
  if (v.space.vars() < 2) throw std::invalid_argument("tensor_split: needs at least 2 variables");
  const Index rows = v.space.cap(0) + 1;
  const Index cols = v.space.dim() / rows;
  // Variable 1 is fastest in the basis order, so the coefficient vector is
  // exactly the column-major layout of the (k1, k') grid.
  return Eigen::Map<const Matrix>(v.coeffs.data(), rows, cols);
}

HardyVector tensor_join(const BoxTruncation& space, const Matrix& grid) {
  if (space.vars() < 2) throw std::invalid_argument("tensor_join: needs at least 2 variables");
  const Index rows = space.cap(0) + 1;
  const Index cols = space.dim() / rows;
  if (grid.rows() != rows || grid.cols() != cols)
    throw std::invalid_argument("tensor_join: grid shape does not match box");
  HardyVector v{space, Vector(space.dim())};
  Eigen::Map<Matrix>(v.coeffs.data(), rows, cols) = grid;
  return v;
}

}  // namespace hardylab
