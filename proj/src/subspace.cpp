#include "hardylab/subspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hardylab {

namespace {

Matrix projection_of(const Matrix& frame) { return frame * frame.adjoint(); }

}  // namespace

Subspace Subspace::zero(const BoxTruncation& space) {
  return from_monomials(space, std::vector<Index>{});
}

Subspace Subspace::full(const BoxTruncation& space) {
  std::vector<Index> all(space.dim());
  for (Index p = 0; p < space.dim(); ++p) all[p] = p;
  return from_monomials(space, std::move(all));
}

Subspace Subspace::from_monomials(const BoxTruncation& space, std::vector<Index> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  for (Index p : positions)
    if (p < 0 || p >= space.dim())
      throw std::out_of_range("Subspace::from_monomials: position outside box");
  Subspace s;
  s.space_ = space;
  s.frame_ = Matrix::Zero(space.dim(), static_cast<Index>(positions.size()));
  for (Index c = 0; c < s.frame_.cols(); ++c) s.frame_(positions[c], c) = Complex(1.0, 0.0);
  s.projection_ = projection_of(s.frame_);
  s.monomial_positions_ = std::move(positions);
  return s;
}

Subspace Subspace::from_monomials(const BoxTruncation& space,
                                  const std::vector<MultiIndex>& indices) {
  std::vector<Index> positions;
  positions.reserve(indices.size());
  for (const MultiIndex& k : indices) positions.push_back(space.position(k));
  return from_monomials(space, std::move(positions));
}

Subspace Subspace::from_frame(const BoxTruncation& space, Matrix orthonormal_frame) {
  Subspace s;
  s.space_ = space;
  s.frame_ = std::move(orthonormal_frame);
  s.projection_ = projection_of(s.frame_);
  // Recognize plain monomial frames so later set arithmetic stays exact.
  std::vector<Index> positions;
  bool monomial = true;
  for (Index c = 0; c < s.frame_.cols() && monomial; ++c) {
    Index nonzero = -1;
    for (Index r = 0; r < s.frame_.rows(); ++r) {
      if (s.frame_(r, c) != Complex(0.0, 0.0)) {
        if (nonzero >= 0 || (s.frame_(r, c) != Complex(1.0, 0.0) &&
                             s.frame_(r, c) != Complex(-1.0, 0.0))) {
          monomial = false;
          break;
        }
        nonzero = r;
      }
    }
    if (nonzero < 0) monomial = false;
    if (monomial) positions.push_back(nonzero);
  }
  if (monomial) {
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) == positions.end())
      s.monomial_positions_ = std::move(positions);
  }
  return s;
}

Subspace orthonormalize(const BoxTruncation& space, const Matrix& columns, double tau_rank) {
  if (columns.cols() == 0) return Subspace::zero(space);
  if (columns.rows() != space.dim())
    throw std::invalid_argument("orthonormalize: column length does not match box dimension");
  Eigen::BDCSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? tau_rank * sigma(0) : 0.0;
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff && sigma(rank) > 0.0) ++rank;
  return Subspace::from_frame(space, svd.matrixU().leftCols(rank));
}

Subspace orthonormalize(const std::vector<HardyVector>& vectors, double tau_rank) {
  if (vectors.empty()) throw std::invalid_argument("orthonormalize: empty input needs a space");
  const BoxTruncation& space = vectors.front().space;
  Matrix columns(space.dim(), static_cast<Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].space != space)
      throw std::invalid_argument("orthonormalize: vectors from different spaces");
    columns.col(static_cast<Index>(i)) = vectors[i].coeffs;
  }
  return orthonormalize(space, columns, tau_rank);
}

Subspace subspace_from_compressed_projection(const BoxTruncation& space, const Matrix& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(p);
  const auto& values = eig.eigenvalues();
  Index count = 0;
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) > 0.5) ++count;
  Matrix frame(space.dim(), count);
  Index c = 0;
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) > 0.5) frame.col(c++) = eig.eigenvectors().col(i);
  return Subspace::from_frame(space, std::move(frame));
}

Subspace span_union(const std::vector<Subspace>& parts, double tau_rank) {
  if (parts.empty()) throw std::invalid_argument("span_union: empty input");
  const BoxTruncation& space = parts.front().space();
  bool all_monomial = true;
  Index total = 0;
  for (const Subspace& s : parts) {
    if (s.space() != space) throw std::invalid_argument("span_union: space mismatch");
    all_monomial = all_monomial && s.is_monomial();
    total += s.rank();
  }
  if (all_monomial) {
    std::vector<Index> positions;
    for (const Subspace& s : parts)
      positions.insert(positions.end(), s.monomial_positions().begin(),
                       s.monomial_positions().end());
    return Subspace::from_monomials(space, std::move(positions));
  }
  Matrix columns(space.dim(), total);
  Index at = 0;
  for (const Subspace& s : parts) {
    columns.middleCols(at, s.rank()) = s.frame();
    at += s.rank();
  }
  return orthonormalize(space, columns, tau_rank);
}

InvarianceResult is_invariant(const Subspace& s, double tol, const InteriorMask& mask) {
  if (mask.space != s.space()) throw std::invalid_argument("is_invariant: mask space mismatch");
  if (mask.empty()) throw std::invalid_argument("is_invariant: truncation too small (empty mask)");
  for (int m : mask.margins)
    if (m < 1) throw std::invalid_argument("is_invariant: mask margins must be >= 1");
  InvarianceResult out;
  const Matrix& p = s.projection();
  const Index dim = s.space().dim();
  for (int i = 0; i < s.space().vars(); ++i) {
    const Matrix shift = shift_op(i, s.space()).mat;
    const Matrix defect = (Matrix::Identity(dim, dim) - p) * shift * p;
    out.residuals.push_back(masked_operator_norm(defect, mask));
  }
  out.max_residual = *std::max_element(out.residuals.begin(), out.residuals.end());
  out.holds = out.max_residual <= tol;
  return out;
}

CompressedShift compress_shift(const Subspace& s, int var) {
  const Matrix shift = shift_op(var, s.space()).mat;
  return {var, s.frame().adjoint() * shift * s.frame()};
}

DoublyCommutingResult is_doubly_commuting(const Subspace& s, double tol,
                                          const InteriorMask& mask) {
  const int n = s.space().vars();
  if (n < 2) throw std::invalid_argument("is_doubly_commuting: needs >= 2 variables");
  if (mask.space != s.space())
    throw std::invalid_argument("is_doubly_commuting: mask space mismatch");
  if (mask.empty())
    throw std::invalid_argument("is_doubly_commuting: truncation too small (empty mask)");
  DoublyCommutingResult out;
  out.residuals = Eigen::MatrixXd::Zero(n, n);
  std::vector<Matrix> compressed;
  compressed.reserve(n);
  for (int i = 0; i < n; ++i) compressed.push_back(compress_shift(s, i).mat);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Matrix defect_frame =
          compressed[i] * compressed[j].adjoint() - compressed[j].adjoint() * compressed[i];
      const Matrix defect_box = s.frame() * defect_frame * s.frame().adjoint();
      const double r = masked_operator_norm(defect_box, mask);
      out.residuals(i, j) = r;
      out.residuals(j, i) = r;
      out.max_residual = std::max(out.max_residual, r);
    }
  }
  out.holds = out.max_residual <= tol;
  return out;
}

WanderingResult wandering_generator(const Subspace& s, double tau_rank) {
  if (s.rank() == 0) return {0, std::nullopt};
  const BoxTruncation& space = s.space();
  if (s.is_monomial()) {
    // Exact route: z_i S is an index shift of the monomial set.
    std::set<Index> members(s.monomial_positions().begin(), s.monomial_positions().end());
    std::set<Index> shifted;
    for (Index p : members) {
      const MultiIndex k = space.index_at(p);
      for (int i = 0; i < space.vars(); ++i) {
        if (k[i] + 1 > space.cap(i)) continue;
        MultiIndex up = k;
        ++up[i];
        shifted.insert(space.position(up));
      }
    }
    std::vector<Index> wandering;
    for (Index p : members)
      if (!shifted.count(p)) wandering.push_back(p);
    WanderingResult out;
    out.rank = static_cast<Index>(wandering.size());
    if (out.rank == 1) out.generator = basis_vector(space, space.index_at(wandering.front()));
    return out;
  }
  Matrix shifted_cols(space.dim(), s.rank() * space.vars());
  for (int i = 0; i < space.vars(); ++i)
    shifted_cols.middleCols(i * s.rank(), s.rank()) = shift_op(i, space).mat * s.frame();
  const Subspace shifted = orthonormalize(space, shifted_cols, tau_rank);
  // P_S - P_{sum z_i S} compresses the projection onto the wandering part.
  const Matrix w_proj = s.projection() - shifted.projection();
  const Subspace w = subspace_from_compressed_projection(space, w_proj);
  WanderingResult out;
  out.rank = w.rank();
  if (out.rank == 1) {
    Vector g = w.frame().col(0);
    const double scale = g.cwiseAbs().maxCoeff();
    Index first = -1;
    for (Index p = 0; p < g.size(); ++p) {
      if (std::abs(g(p)) > 1e-12 * scale) {
        first = p;
        break;
      }
    }
    if (first >= 0) g *= std::abs(g(first)) / g(first);
    out.generator = HardyVector{space, std::move(g)};
  }
  return out;
}

}  // namespace hardylab
