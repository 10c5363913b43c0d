#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qtensor::coeff {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z[q, q^-1], stored as an exponent-sorted sparse list of
/// nonzero big-integer coefficients.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coeff, int exp);
  /// Collects like exponents and drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Lowest and highest exponents; undefined on zero.
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }
  const Integer& leading_coeff() const { return terms_.back().coeff; }

  /// Terms in increasing exponent order.
  const std::vector<Term>& terms() const { return terms_; }
  Integer coeff(int exp) const;

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// Positive gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;
  LaurentPoly divided_exactly(const Integer& d) const;

  Rational evaluate(const Rational& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }

  bool operator==(const LaurentPoly& other) const = default;
  /// Total order used only for deterministic containers.
  std::strong_ordering operator<=>(const LaurentPoly& other) const;

  /// Decreasing exponents, `c*q^e`, e.g. `q^3 + 2*q + 2*q^-1 + q^-3`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_scaled(const LaurentPoly& other, int sign);

  std::vector<Term> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace qtensor::coeff
