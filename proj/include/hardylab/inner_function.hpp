#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardylab/types.hpp"

namespace hardylab {

/// Rational inner function of one variable: a unimodular constant times a
/// finite Blaschke product.  Zeros are stored with multiplicity, in a fixed
/// canonical order; a zero at the origin contributes a plain factor z.
class InnerFunction1D {
 public:
  InnerFunction1D();  // the constant function 1
  InnerFunction1D(Complex constant, std::vector<Complex> zeros);

  static InnerFunction1D monomial(int degree);
  static InnerFunction1D unimodular(Complex constant);

  Complex constant() const { return constant_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }
  bool is_constant() const { return zeros_.empty(); }
  /// True when every zero sits at the origin (c * z^m).
  bool is_monomial() const;

  InnerFunction1D times(const InnerFunction1D& other) const;
  Complex eval(Complex z) const;

 private:
  Complex constant_;
  std::vector<Complex> zeros_;
};

/// Maclaurin coefficients through the requested order, plus a bound tau on
/// the absolute tail sum_{k>order} |c_k| (zero when all zeros are at the
/// origin).
struct TaylorExpansion {
  Vector coeffs;
  double tail_bound = 0.0;
};

TaylorExpansion taylor_coeffs(const InnerFunction1D& f, int order);

/// Closed-form tail bound used by TaylorExpansion.
double taylor_tail_bound(const InnerFunction1D& f, int order);

struct DivisionResult {
  bool divides = false;
  std::optional<InnerFunction1D> quotient;
};

/// f divides g iff f's zero multiset is contained in g's; the quotient then
/// has the complementary zeros and constant g.c / f.c.
DivisionResult divides(const InnerFunction1D& f, const InnerFunction1D& g);

/// Inner function on a polydisc of the coordinate-product form
/// eta(z) = prod_i eta_i(z_i); factor i acts on variable i.
class InnerFunctionProd {
 public:
  InnerFunctionProd() = default;
  explicit InnerFunctionProd(std::vector<InnerFunction1D> factors);

  static InnerFunctionProd one(int vars);

  int vars() const { return static_cast<int>(factors_.size()); }
  const std::vector<InnerFunction1D>& factors() const { return factors_; }
  const InnerFunction1D& factor(int var) const { return factors_.at(var); }

  int degree(int var) const { return factors_.at(var).degree(); }
  int total_degree() const;
  bool is_constant() const { return total_degree() == 0; }
  bool is_monomial() const;

  InnerFunctionProd times(const InnerFunctionProd& other) const;

 private:
  std::vector<InnerFunction1D> factors_;
};

struct ProdDivisionResult {
  bool divides = false;
  std::optional<InnerFunctionProd> quotient;
};

ProdDivisionResult divides(const InnerFunctionProd& f, const InnerFunctionProd& g);

enum class SeqDirection { kIncreasing, kDecreasing };

std::string to_string(SeqDirection direction);

/// Finite chain of inner functions declared increasing (each consecutive
/// ratio terms[j+1]/terms[j] a non-constant inner function) or decreasing
/// (terms[j]/terms[j+1] non-constant).
struct InnerSeq {
  SeqDirection direction = SeqDirection::kDecreasing;
  std::vector<InnerFunctionProd> terms;

  int size() const { return static_cast<int>(terms.size()); }
  int vars() const { return terms.empty() ? 0 : terms.front().vars(); }
};

struct SeqValidation {
  bool ok = false;
  int first_bad_pair = -1;  // 1-based index j of the offending pair (j, j+1)
  std::string message;
};

/// Non-constancy of each consecutive ratio is decided combinatorially from
/// quotient degrees, never numerically.
SeqValidation validate_inner_sequence(const InnerSeq& seq);

}  // namespace hardylab
