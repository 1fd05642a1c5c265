#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hardylab/box.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/linop.hpp"
#include "hardylab/types.hpp"

namespace hardylab {

/// Closed subspace of a box truncation, held as an orthonormal column frame
/// with the projection frame * frame^H cached.  Subspaces spanned by plain
/// monomials additionally remember their basis-position set, which keeps the
/// frequent monomial scenarios exact and fast.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const BoxTruncation& space);
  static Subspace full(const BoxTruncation& space);
  static Subspace from_monomials(const BoxTruncation& space, std::vector<Index> positions);
  static Subspace from_monomials(const BoxTruncation& space, const std::vector<MultiIndex>& indices);
  static Subspace from_frame(const BoxTruncation& space, Matrix orthonormal_frame);

  const BoxTruncation& space() const { return space_; }
  const Matrix& frame() const { return frame_; }
  const Matrix& projection() const { return projection_; }
  Index rank() const { return frame_.cols(); }

  bool is_monomial() const { return monomial_positions_.has_value(); }
  const std::vector<Index>& monomial_positions() const { return *monomial_positions_; }

 private:
  BoxTruncation space_;
  Matrix frame_;
  Matrix projection_;
  std::optional<std::vector<Index>> monomial_positions_;
};

/// Orthonormal frame for the column span: singular directions below
/// tau_rank * sigma_max are discarded.  Deterministic for a fixed input.
Subspace orthonormalize(const BoxTruncation& space, const Matrix& columns,
                        double tau_rank = kRankTol);
Subspace orthonormalize(const std::vector<HardyVector>& vectors, double tau_rank = kRankTol);

/// Subspace from a Hermitian matrix that compresses a projection: keeps the
/// eigenspaces with eigenvalue > 1/2.
Subspace subspace_from_compressed_projection(const BoxTruncation& space, const Matrix& p);

/// Smallest subspace containing all the given ones.
Subspace span_union(const std::vector<Subspace>& parts, double tau_rank = kRankTol);

struct InvarianceResult {
  bool holds = false;
  std::vector<double> residuals;  // one per variable
  double max_residual = 0.0;
};

/// residual_i = || ((I - P) M_{z_i} P)(mask, mask) ||_2.  Requires mask
/// margins >= 1 in every variable and a nonempty mask.
InvarianceResult is_invariant(const Subspace& s, double tol, const InteriorMask& mask);

struct CompressedShift {
  int var = 0;
  Matrix mat;  // frame^H M_{z_var} frame
};

CompressedShift compress_shift(const Subspace& s, int var);

struct DoublyCommutingResult {
  bool holds = false;
  Eigen::MatrixXd residuals;  // entry (i, j), i != j
  double max_residual = 0.0;
};

/// residual_{ij} = norm of the commutation defect R_i R_j^* - R_j^* R_i
/// pulled back to box coordinates through the frame and restricted to the
/// mask.  Requires >= 2 variables and a nonempty mask.
DoublyCommutingResult is_doubly_commuting(const Subspace& s, double tol, const InteriorMask& mask);

struct WanderingResult {
  Index rank = 0;
  std::optional<HardyVector> generator;  // present iff rank == 1
};

/// Wandering space S (-) sum_i z_i S on the truncation.  A rank-one result is
/// returned as a unit generator with its first nonzero coefficient (in basis
/// order) made positive real.
WanderingResult wandering_generator(const Subspace& s, double tau_rank = kRankTol);

}  // namespace hardylab
