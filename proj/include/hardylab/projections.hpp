#pragma once

#include <vector>

#include "hardylab/box.hpp"
#include "hardylab/inner_function.hpp"
#include "hardylab/subspace.hpp"
#include "hardylab/types.hpp"

namespace hardylab {

/// Finite family {P_1, ..., P_J} of pairwise-orthogonal projections summing
/// to the identity on a box truncation, stored through the members' ranges.
class ProjectionFamily {
 public:
  ProjectionFamily() = default;
  ProjectionFamily(BoxTruncation space, std::vector<Subspace> members);

  const BoxTruncation& space() const { return space_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Subspace& member(int j) const { return members_.at(j); }
  const std::vector<Subspace>& members() const { return members_; }

 private:
  BoxTruncation space_;
  std::vector<Subspace> members_;
};

/// Coordinate projections onto disjoint blocks of basis monomials.  The
/// blocks must partition the box basis; violations name the offending index.
ProjectionFamily family_from_partition(const BoxTruncation& space,
                                       const std::vector<std::vector<MultiIndex>>& blocks);

/// Family built from an increasing chain of coordinate-product inner
/// functions: member ranges are phi_j H^2 (-) phi_{j+1} H^2 on the box, with
/// a final member phi_J H^2 and, when phi_1 is non-constant, a leading member
/// carrying the complement of phi_1 H^2.
ProjectionFamily family_from_inner_chain(const BoxTruncation& space, const InnerSeq& chain);

/// Family from explicit generating columns per member (orthonormalized).
ProjectionFamily family_from_frames(const BoxTruncation& space,
                                    const std::vector<Matrix>& member_columns,
                                    double tau_rank = kRankTol);

struct FamilyValidation {
  bool ok = false;
  double max_pairwise = 0.0;    // max over j != k of ||P_j P_k||
  double completeness = 0.0;    // || sum_j P_j - I ||
};

/// Invariant check, optionally restricted to an interior mask (used for
/// chain families whose members are exact only away from the degree cap).
FamilyValidation validate_family(const ProjectionFamily& family, double tol,
                                 const InteriorMask* mask = nullptr);

/// Direct sum of member ranges j0.. (tail) or ..j0 (head), 0-based j0.
Subspace tail_space(const ProjectionFamily& family, int j0);
Subspace head_space(const ProjectionFamily& family, int j0);

}  // namespace hardylab
