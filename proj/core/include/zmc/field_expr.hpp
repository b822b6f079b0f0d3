#pragma once

// Exact multivariate expressions in light-cone form.
//
// A FieldExpr on R^D is a finite sum of terms
//
//     c * u^p * v^q * (x^1)^m_1 ... (x^M)^m_M,      u = t + z,  v = t - z,
//
// with c a nonzero rational, p rational, q and m_a nonnegative integers.
// Terms are kept collected with no zero coefficients, so two expressions
// are equal exactly when their term maps agree; that is the zero test the
// verifiers rely on.

#include "zmc/rational.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace zmc {

struct MonomialKey {
  Rational u_exp;
  unsigned v_exp = 0;
  std::vector<unsigned> x_exp;  // one per transverse coordinate

  bool operator==(const MonomialKey&) const = default;
};

struct MonomialKeyLess {
  bool operator()(const MonomialKey& a, const MonomialKey& b) const;
};

class CompiledExpr;

class FieldExpr {
 public:
  using TermMap = std::map<MonomialKey, Rational, MonomialKeyLess>;

  /// The zero expression on R^dim.
  explicit FieldExpr(int dim);

  static FieldExpr constant(int dim, const Rational& c);
  static FieldExpr monomial(int dim, const Rational& c, MonomialKey key);
  /// u^p.
  static FieldExpr u_power(int dim, const Rational& p);
  /// v^q.
  static FieldExpr v_power(int dim, unsigned q);
  /// x^a for transverse index a in [0, M).
  static FieldExpr coordinate(int dim, int a);

  int dim() const { return dim_; }
  int transverse_dim() const { return dim_ - 2; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given monomial, 0 when absent.
  Rational coefficient(const MonomialKey& key) const;

  /// True when every u exponent is an integer.
  bool has_integer_exponents() const;

  /// Adds c * key in place, keeping the collected form.
  void accumulate(const MonomialKey& key, const Rational& c);

  FieldExpr& operator+=(const FieldExpr& other);
  FieldExpr& operator-=(const FieldExpr& other);
  FieldExpr& operator*=(const Rational& c);

  friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) { return a += b; }
  friend FieldExpr operator-(FieldExpr a, const FieldExpr& b) { return a -= b; }
  friend FieldExpr operator-(FieldExpr a) { return a *= Rational(-1); }
  friend FieldExpr operator*(FieldExpr a, const Rational& c) { return a *= c; }
  friend FieldExpr operator*(const Rational& c, FieldExpr a) { return a *= c; }
  friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b);

  friend bool operator==(const FieldExpr& a, const FieldExpr& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Numeric value at point = (t, x^1, ..., x^M, z). Throws std::domain_error
  /// if u <= 0 while a fractional u exponent is present, or u == 0 with a
  /// negative exponent.
  double eval(std::span<const double> point) const;

  /// Exact value at a rational point; requires integer u exponents.
  Rational eval_exact(std::span<const Rational> point) const;

  CompiledExpr compile() const;

  /// "c * u^p * v^q * x1^m1 ..." terms joined by " + ", in key order; "0"
  /// for the zero expression.
  std::string to_string() const;

 private:
  int dim_;
  TermMap terms_;
};

FieldExpr add(const FieldExpr& a, const FieldExpr& b);
FieldExpr mul(const FieldExpr& a, const FieldExpr& b);
FieldExpr scale(const FieldExpr& a, const Rational& c);

/// Double-precision snapshot of a FieldExpr for repeated evaluation.
class CompiledExpr {
 public:
  double eval(std::span<const double> point) const;

 private:
  friend class FieldExpr;
  struct Term {
    double coeff;
    double u_exp;
    bool u_integer;
    long u_int_exp;
    unsigned v_exp;
    std::vector<unsigned> x_exp;
  };
  int dim_ = 0;
  bool fractional_ = false;
  std::vector<Term> terms_;
};

}  // namespace zmc
