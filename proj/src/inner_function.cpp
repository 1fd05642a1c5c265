#include "hardylab/inner_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hardylab {

namespace {

bool zero_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_canonical(std::vector<Complex>& zeros) {
  std::sort(zeros.begin(), zeros.end(), zero_less);
}

}  // namespace

InnerFunction1D::InnerFunction1D() : constant_(1.0, 0.0) {}

InnerFunction1D::InnerFunction1D(Complex constant, std::vector<Complex> zeros)
    : constant_(constant), zeros_(std::move(zeros)) {
  const double mag = std::abs(constant_);
  if (std::abs(mag - 1.0) > kUnimodularTol)
    throw std::invalid_argument("InnerFunction1D: constant is not unimodular");
  constant_ /= mag;
  for (const Complex& a : zeros_) {
    if (std::abs(a) > kZeroRadiusCap)
      throw std::invalid_argument("InnerFunction1D: zero too close to the unit circle");
  }
  sort_canonical(zeros_);
}

InnerFunction1D InnerFunction1D::monomial(int degree) {
  if (degree < 0) throw std::invalid_argument("InnerFunction1D::monomial: negative degree");
  return InnerFunction1D(Complex(1.0, 0.0), std::vector<Complex>(degree, Complex(0.0, 0.0)));
}

InnerFunction1D InnerFunction1D::unimodular(Complex constant) {
  return InnerFunction1D(constant, {});
}

bool InnerFunction1D::is_monomial() const {
  return std::all_of(zeros_.begin(), zeros_.end(),
                     [](const Complex& a) { return a == Complex(0.0, 0.0); });
}

InnerFunction1D InnerFunction1D::times(const InnerFunction1D& other) const {
  std::vector<Complex> zeros = zeros_;
  zeros.insert(zeros.end(), other.zeros_.begin(), other.zeros_.end());
  return InnerFunction1D(constant_ * other.constant_, std::move(zeros));
}

Complex InnerFunction1D::eval(Complex z) const {
  Complex value = constant_;
  for (const Complex& a : zeros_) value *= (z - a) / (1.0 - std::conj(a) * z);
  return value;
}

double taylor_tail_bound(const InnerFunction1D& f, int order) {
  if (f.is_monomial()) return 0.0;
  double rho = 0.0;
  double c = 1.0;
  for (const Complex& a : f.zeros()) {
    rho = std::max(rho, std::abs(a));
    c *= 1.0 + std::abs(a);
  }
  const int m = f.degree();
  return c * std::pow(rho, order - m + 1) / (1.0 - rho);
}

TaylorExpansion taylor_coeffs(const InnerFunction1D& f, int order) {
  if (order < 0) throw std::invalid_argument("taylor_coeffs: negative order");
  Vector coeffs = Vector::Zero(order + 1);
  coeffs(0) = f.constant();
  for (const Complex& a : f.zeros()) {
    // One Blaschke factor: c_0 = -a, c_k = conj(a)^{k-1} (1 - |a|^2), k >= 1.
    Vector factor = Vector::Zero(order + 1);
    factor(0) = -a;
    const double w = 1.0 - std::norm(a);
    Complex pw(1.0, 0.0);
    for (int k = 1; k <= order; ++k) {
      factor(k) = pw * w;
      pw *= std::conj(a);
    }
    Vector next = Vector::Zero(order + 1);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) next(i + j) += coeffs(i) * factor(j);
    coeffs = std::move(next);
  }
  return {std::move(coeffs), taylor_tail_bound(f, order)};
}

DivisionResult divides(const InnerFunction1D& f, const InnerFunction1D& g) {
  // Multiset containment with exact coordinate equality: zeros originate from
  // literals and survive JSON round trips bit for bit.
  std::vector<Complex> remaining = g.zeros();
  for (const Complex& a : f.zeros()) {
    auto it = std::find(remaining.begin(), remaining.end(), a);
    if (it == remaining.end()) return {false, std::nullopt};
    remaining.erase(it);
  }
  return {true, InnerFunction1D(g.constant() / f.constant(), std::move(remaining))};
}

InnerFunctionProd::InnerFunctionProd(std::vector<InnerFunction1D> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("InnerFunctionProd: needs >= 1 factor");
}

InnerFunctionProd InnerFunctionProd::one(int vars) {
  return InnerFunctionProd(std::vector<InnerFunction1D>(vars, InnerFunction1D()));
}

int InnerFunctionProd::total_degree() const {
  int total = 0;
  for (const auto& f : factors_) total += f.degree();
  return total;
}

bool InnerFunctionProd::is_monomial() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const InnerFunction1D& f) { return f.is_monomial(); });
}

InnerFunctionProd InnerFunctionProd::times(const InnerFunctionProd& other) const {
  if (vars() != other.vars())
    throw std::invalid_argument("InnerFunctionProd::times: variable count mismatch");
  std::vector<InnerFunction1D> factors;
  factors.reserve(factors_.size());
  for (int i = 0; i < vars(); ++i) factors.push_back(factors_[i].times(other.factors_[i]));
  return InnerFunctionProd(std::move(factors));
}

ProdDivisionResult divides(const InnerFunctionProd& f, const InnerFunctionProd& g) {
  if (f.vars() != g.vars()) return {false, std::nullopt};
  std::vector<InnerFunction1D> quotient;
  quotient.reserve(f.vars());
  for (int i = 0; i < f.vars(); ++i) {
    DivisionResult d = divides(f.factor(i), g.factor(i));
    if (!d.divides) return {false, std::nullopt};
    quotient.push_back(*d.quotient);
  }
  return {true, InnerFunctionProd(std::move(quotient))};
}

std::string to_string(SeqDirection direction) {
  return direction == SeqDirection::kIncreasing ? "increasing" : "decreasing";
}

SeqValidation validate_inner_sequence(const InnerSeq& seq) {
  if (seq.terms.empty()) return {false, -1, "sequence has no terms"};
  for (const auto& term : seq.terms) {
    if (term.vars() != seq.vars())
      return {false, -1, "terms have mismatched variable counts"};
  }
  for (int j = 0; j + 1 < seq.size(); ++j) {
    const bool increasing = seq.direction == SeqDirection::kIncreasing;
    const InnerFunctionProd& num = increasing ? seq.terms[j + 1] : seq.terms[j];
    const InnerFunctionProd& den = increasing ? seq.terms[j] : seq.terms[j + 1];
    ProdDivisionResult d = divides(den, num);
    std::ostringstream msg;
    if (!d.divides) {
      msg << "pair (" << j + 1 << "," << j + 2 << "): ratio is not an inner function";
      return {false, j + 1, msg.str()};
    }
    if (d.quotient->total_degree() == 0) {
      msg << "pair (" << j + 1 << "," << j + 2 << "): quotient constant";
      return {false, j + 1, msg.str()};
    }
  }
  return {true, -1, "ok"};
}

}  // namespace hardylab
