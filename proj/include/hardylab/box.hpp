#pragma once

#include <string>
#include <vector>

#include "hardylab/types.hpp"

namespace hardylab {

/// Exponent tuple of a monomial z^k; one non-negative entry per variable.
using MultiIndex = std::vector<int>;

std::string to_string(const MultiIndex& k);

/// Finite box model of the Hardy space over the polydisc: coefficients are
/// kept for every monomial z^k with 0 <= k_i <= cap_i.  The basis is
/// enumerated colexicographically with variable 1 varying fastest,
///
///   position(k) = k_1 + (d_1+1) * (k_2 + (d_2+1) * (k_3 + ...)),
///
/// and every matrix and serialization in the project uses this order.
class BoxTruncation {
 public:
  BoxTruncation() = default;
  explicit BoxTruncation(std::vector<int> caps);

  int vars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  int cap(int var) const { return caps_.at(var); }
  Index dim() const { return dim_; }
  Index stride(int var) const { return strides_.at(var); }

  bool contains(const MultiIndex& k) const;
  Index position(const MultiIndex& k) const;
  MultiIndex index_at(Index p) const;

  /// Sub-box on the first `count` variables.
  BoxTruncation head_box(int count) const;
  /// Sub-box on variables count..n-1.
  BoxTruncation tail_box(int count) const;

  bool operator==(const BoxTruncation& other) const { return caps_ == other.caps_; }
  bool operator!=(const BoxTruncation& other) const { return !(*this == other); }

 private:
  std::vector<int> caps_;
  std::vector<Index> strides_;
  Index dim_ = 0;
};

/// All box indices exactly once in the documented order.
std::vector<MultiIndex> enumerate_basis(const BoxTruncation& space);

/// Basis indices with k_i <= cap_i - margin_i for every variable: the part of
/// the box where identities of bounded degree-raising hold exactly as in the
/// untruncated space.  May be empty (margin exceeding a cap); callers flag
/// that rather than erroring here.
struct InteriorMask {
  BoxTruncation space;
  std::vector<int> margins;
  std::vector<Index> positions;  // sorted ascending

  bool empty() const { return positions.empty(); }
  Index size() const { return static_cast<Index>(positions.size()); }
};

InteriorMask interior_mask(const BoxTruncation& space, const std::vector<int>& margins);

/// Square submatrix A(mask, mask).
Matrix masked_block(const Matrix& a, const InteriorMask& mask);

/// Spectral norm of A(mask, mask); 0 for an empty mask.
double masked_operator_norm(const Matrix& a, const InteriorMask& mask);

/// Spectral norm (largest singular value); 0 for an empty matrix.
double operator_norm(const Matrix& a);

}  // namespace hardylab
