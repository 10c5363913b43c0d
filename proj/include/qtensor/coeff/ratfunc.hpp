#pragma once

#include <string>
#include <string_view>

#include "qtensor/coeff/laurent_poly.hpp"

namespace qtensor::coeff {

/// Element of Q(q), kept in a canonical form so that equality is structural:
///  - the denominator has lowest exponent 0 and a positive leading coefficient,
///  - numerator and denominator are coprime over Q,
///  - the integer contents of numerator and denominator are coprime.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc q_power(int e) { return RatFunc(LaurentPoly::monomial(1, e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Multiplication by q^k; cheap because q is a unit.
  RatFunc times_q_power(int k) const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  bool operator==(const RatFunc& other) const = default;

  /// Evaluation at q0; rejects q0 in {0, 1, -1} and vanishing denominators.
  Rational specialize(const Rational& q0) const;

  /// `(<num>)/(<den>)`, or just `<num>` when the denominator is 1.
  std::string to_string() const;
  static RatFunc parse(std::string_view text);

 private:
  struct Canonical {};
  RatFunc(Canonical, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  /// Unit shift, content and sign normalization, assuming num and den are
  /// already coprime as polynomials.
  static RatFunc from_coprime(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const RatFunc& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational specialize(const RatFunc& a, const Rational& q0) { return a.specialize(q0); }

/// Gcd over Q of two nonzero Laurent polynomials, normalized to lowest
/// exponent 0, primitive, positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact quotient a / b; throws ConsistencyFailure when b does not divide a
/// in Q[q, q^-1] with integral result.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// Free-function form of the field operations.
enum class ArithOp { add, sub, mul, div, neg };
RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

}  // namespace qtensor::coeff
