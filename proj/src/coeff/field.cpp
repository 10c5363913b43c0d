#include "qtensor/coeff/field.hpp"

#include <cctype>
#include <cstdlib>

#include "qtensor/coeff/qnumbers.hpp"
#include "qtensor/error.hpp"

namespace qtensor::coeff {

GenericField::Scalar GenericField::qint(int m) const { return RatFunc(coeff::qint(m)); }

SpecializedField::SpecializedField(Rational q0) : q0_(std::move(q0)) {
  q0_.canonicalize();
  if (q0_ == 0 || q0_ == 1 || q0_ == -1)
    throw InvalidSpecialization("q0 must not be 0, 1 or -1 (got " + q0_.get_str() + ")");
}

SpecializedField::Scalar SpecializedField::q_power(int e) const {
  unsigned long k = static_cast<unsigned long>(std::abs(e));
  Rational p;
  mpz_pow_ui(p.get_num_mpz_t(), q0_.get_num_mpz_t(), k);
  mpz_pow_ui(p.get_den_mpz_t(), q0_.get_den_mpz_t(), k);
  p.canonicalize();
  return e >= 0 ? p : Rational(1 / p);
}

SpecializedField::Scalar SpecializedField::qint(int m) const {
  return coeff::qint(m).evaluate(q0_);
}

SpecializedField::Scalar SpecializedField::parse(std::string_view text) const {
  return parse_rational(text);
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw ParseError("cannot parse rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational r;
  r.get_num() = Integer(num);
  r.get_den() = Integer(den);
  if (r.get_den() == 0) throw DivisionByZero();
  r.canonicalize();
  return r;
}

}  // namespace qtensor::coeff
