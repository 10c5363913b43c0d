#include "qtensor/coeff/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "qtensor/error.hpp"

namespace qtensor::coeff {

namespace {

// Ordinary polynomial in Z[q], ascending degree, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
  Dense d(static_cast<std::size_t>(p.max_exp() - p.min_exp() + 1));
  for (const auto& t : p.terms()) d[t.exp - p.min_exp()] = t.coeff;
  return d;
}

LaurentPoly from_dense(Dense d, int low) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) terms.push_back({static_cast<int>(i) + low, std::move(d[i])});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

void make_primitive(Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Primitive part of a pseudo-remainder of a by b.
Dense primitive_prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(a[i + shift].get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
    }
    trim(a);
    if (!a.empty()) make_primitive(a);
  }
  return a;
}

// Quotient of a by b when the division is exact over Z; nullopt-like empty
// flag through `ok`.
Dense dense_divide(Dense a, const Dense& b, bool& ok) {
  ok = true;
  if (a.size() < b.size()) {
    ok = a.empty();
    return {};
  }
  const std::size_t db = b.size() - 1;
  Dense quot(a.size() - db);
  while (!a.empty() && a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) {
      ok = false;
      return {};
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(a[i + shift].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    }
    quot[shift] = std::move(c);
    trim(a);
  }
  ok = a.empty();
  return quot;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("poly_gcd of zero polynomial");
  if (a.is_monomial() || b.is_monomial()) return 1;
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    Dense r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  if (y.size() == 1) return 1;  // nonzero constant remainder: coprime
  return from_dense(std::move(x), 0);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly p = a.shifted(-b.min_exp());
    const Integer& c = b.terms()[0].coeff;
    if (c == 1) return p;
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
        throw ConsistencyFailure("inexact polynomial division");
    }
    return p.divided_exactly(c);
  }
  bool ok = false;
  Dense q = dense_divide(to_dense(a), to_dense(b), ok);
  if (!ok) throw ConsistencyFailure("inexact polynomial division");
  return from_dense(std::move(q), a.min_exp() - b.min_exp());
}

RatFunc RatFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
  if (num.is_zero()) return RatFunc();
  int shift = -den.min_exp();
  if (shift != 0) {
    num = num.shifted(shift);
    den = den.shifted(shift);
  }
  if (!den.is_one()) {
    Integer g = gcd(num.content(), den.content());
    if (den.leading_coeff() < 0) g = -g;
    if (g != 1) {
      num = num.divided_exactly(g);
      den = den.divided_exactly(g);
    }
  }
  return RatFunc(Canonical{}, std::move(num), std::move(den));
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = 1;
    return;
  }
  LaurentPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  *this = from_coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::times_q_power(int k) const {
  return k == 0 ? *this : RatFunc(Canonical{}, num_.shifted(k), den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_coprime(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) {
    LaurentPoly t = a.num_ + b.num_;
    if (t.is_zero()) return RatFunc();
    return RatFunc(std::move(t), a.den_);
  }
  LaurentPoly g = (a.den_.is_one() || b.den_.is_one()) ? LaurentPoly(1) : poly_gcd(a.den_, b.den_);
  if (g.is_one()) {
    return RatFunc::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  LaurentPoly bq = exact_quotient(a.den_, g);
  LaurentPoly dq = exact_quotient(b.den_, g);
  LaurentPoly t = a.num_ * dq + b.num_ * bq;
  if (t.is_zero()) return RatFunc();
  LaurentPoly h = poly_gcd(t, g);
  if (!h.is_one()) {
    t = exact_quotient(t, h);
    dq *= exact_quotient(g, h);
  } else {
    dq *= g;
  }
  return RatFunc::from_coprime(std::move(t), bq * dq);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    LaurentPoly g = poly_gcd(an, bd);
    if (!g.is_one()) {
      an = exact_quotient(an, g);
      bd = exact_quotient(bd, g);
    }
  }
  if (!ad.is_one()) {
    LaurentPoly g = poly_gcd(bn, ad);
    if (!g.is_one()) {
      bn = exact_quotient(bn, g);
      ad = exact_quotient(ad, g);
    }
  }
  return RatFunc::from_coprime(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

Rational RatFunc::specialize(const Rational& q0) const {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw InvalidSpecialization("q0 must not be 0, 1 or -1 (got " + q0.get_str() + ")");
  Rational d = den_.evaluate(q0);
  if (d == 0)
    throw InvalidSpecialization("denominator " + den_.to_string() + " vanishes at q0 = " +
                                q0.get_str());
  return num_.evaluate(q0) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(std::string_view text) {
  auto trim_ws = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim_ws(text);
  if (s.empty() || s.front() != '(') return RatFunc(LaurentPoly::parse(s));
  std::size_t close = s.find(')');
  if (close == std::string_view::npos) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
  LaurentPoly num = LaurentPoly::parse(s.substr(1, close - 1));
  std::string_view rest = trim_ws(s.substr(close + 1));
  if (rest.empty()) return RatFunc(std::move(num));
  if (rest.front() != '/') throw ParseError("expected '/' in '" + std::string(s) + "'");
  rest = trim_ws(rest.substr(1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw ParseError("denominator must be parenthesized in '" + std::string(s) + "'");
  LaurentPoly den = LaurentPoly::parse(rest.substr(1, rest.size() - 2));
  if (den.is_zero()) throw DivisionByZero();
  return RatFunc(std::move(num), std::move(den));
}

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    case ArithOp::neg: return -a;
  }
  return {};
}

}  // namespace qtensor::coeff
