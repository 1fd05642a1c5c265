#include "hardylab/box.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hardylab {

std::string to_string(const MultiIndex& k) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out << ",";
    out << k[i];
  }
  out << ")";
  return out.str();
}

BoxTruncation::BoxTruncation(std::vector<int> caps) : caps_(std::move(caps)) {
  if (caps_.empty()) throw std::invalid_argument("BoxTruncation: needs at least one variable");
  strides_.resize(caps_.size());
  Index stride = 1;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (caps_[i] < 0) throw std::invalid_argument("BoxTruncation: negative cap");
    strides_[i] = stride;
    stride *= static_cast<Index>(caps_[i]) + 1;
  }
  dim_ = stride;
}

bool BoxTruncation::contains(const MultiIndex& k) const {
  if (static_cast<int>(k.size()) != vars()) return false;
  for (int i = 0; i < vars(); ++i)
    if (k[i] < 0 || k[i] > caps_[i]) return false;
  return true;
}

Index BoxTruncation::position(const MultiIndex& k) const {
  if (!contains(k))
    throw std::out_of_range("BoxTruncation::position: index " + to_string(k) + " outside box");
  Index p = 0;
  for (int i = 0; i < vars(); ++i) p += strides_[i] * k[i];
  return p;
}

MultiIndex BoxTruncation::index_at(Index p) const {
  if (p < 0 || p >= dim_) throw std::out_of_range("BoxTruncation::index_at: position outside box");
  MultiIndex k(vars());
  for (int i = 0; i < vars(); ++i) {
    k[i] = static_cast<int>((p / strides_[i]) % (caps_[i] + 1));
  }
  return k;
}

BoxTruncation BoxTruncation::head_box(int count) const {
  if (count < 1 || count > vars()) throw std::invalid_argument("head_box: bad variable count");
  return BoxTruncation(std::vector<int>(caps_.begin(), caps_.begin() + count));
}

BoxTruncation BoxTruncation::tail_box(int count) const {
  if (count < 0 || count >= vars()) throw std::invalid_argument("tail_box: bad variable count");
  return BoxTruncation(std::vector<int>(caps_.begin() + count, caps_.end()));
}

std::vector<MultiIndex> enumerate_basis(const BoxTruncation& space) {
  std::vector<MultiIndex> out;
  out.reserve(space.dim());
  for (Index p = 0; p < space.dim(); ++p) out.push_back(space.index_at(p));
  return out;
}

InteriorMask interior_mask(const BoxTruncation& space, const std::vector<int>& margins) {
  if (static_cast<int>(margins.size()) != space.vars())
    throw std::invalid_argument("interior_mask: margin count does not match variable count");
  for (int m : margins)
    if (m < 0) throw std::invalid_argument("interior_mask: negative margin");
  InteriorMask mask{space, margins, {}};
  for (Index p = 0; p < space.dim(); ++p) {
    const MultiIndex k = space.index_at(p);
    bool inside = true;
    for (int i = 0; i < space.vars(); ++i) {
      if (k[i] > space.cap(i) - margins[i]) {
        inside = false;
        break;
      }
    }
    if (inside) mask.positions.push_back(p);
  }
  return mask;
}

Matrix masked_block(const Matrix& a, const InteriorMask& mask) {
  const Index m = mask.size();
  Matrix out(m, m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c) out(r, c) = a(mask.positions[r], mask.positions[c]);
  return out;
}

double masked_operator_norm(const Matrix& a, const InteriorMask& mask) {
  if (mask.empty()) return 0.0;
  return operator_norm(masked_block(a, mask));
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.operatorNorm();
}

}  // namespace hardylab
