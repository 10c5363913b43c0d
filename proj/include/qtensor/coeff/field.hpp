#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "qtensor/coeff/ratfunc.hpp"

namespace qtensor::coeff {

/// Scalar policy used by every algorithm in the library. The generic field is
/// Q(q) itself; a specialized field evaluates q at a fixed rational q0.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::Scalar& s, int k,
                                    std::string_view text, const RatFunc& rf) {
  typename F::Scalar;
  { f.from_int(k) } -> std::same_as<typename F::Scalar>;
  { f.q_power(k) } -> std::same_as<typename F::Scalar>;
  { f.times_q_power(s, k) } -> std::same_as<typename F::Scalar>;
  { f.qint(k) } -> std::same_as<typename F::Scalar>;
  { f.from_ratfunc(rf) } -> std::same_as<typename F::Scalar>;
  { f.render(s) } -> std::same_as<std::string>;
  { f.parse(text) } -> std::same_as<typename F::Scalar>;
  { f.name() } -> std::same_as<std::string>;
};

class GenericField {
 public:
  using Scalar = RatFunc;

  Scalar from_int(long c) const { return RatFunc(c); }
  Scalar q_power(int e) const { return RatFunc::q_power(e); }
  Scalar times_q_power(const Scalar& s, int e) const { return s.times_q_power(e); }
  Scalar qint(int m) const;
  Scalar from_ratfunc(const RatFunc& a) const { return a; }
  std::string render(const Scalar& s) const { return s.to_string(); }
  Scalar parse(std::string_view text) const { return RatFunc::parse(text); }
  std::string name() const { return "generic"; }
};

class SpecializedField {
 public:
  using Scalar = Rational;

  /// Throws InvalidSpecialization for q0 in {0, 1, -1}.
  explicit SpecializedField(Rational q0);

  const Rational& q0() const { return q0_; }
  Scalar from_int(long c) const { return Rational(c); }
  Scalar q_power(int e) const;
  Scalar times_q_power(const Scalar& s, int e) const { return s * q_power(e); }
  Scalar qint(int m) const;
  Scalar from_ratfunc(const RatFunc& a) const { return a.specialize(q0_); }
  std::string render(const Scalar& s) const {
    Rational c = s;
    c.canonicalize();
    return c.get_str();
  }
  Scalar parse(std::string_view text) const;
  std::string name() const { return "q0=" + q0_.get_str(); }

 private:
  Rational q0_;
};

/// Parses `num[/den]`; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace qtensor::coeff
