#include "qtensor/coeff/laurent_poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <map>

#include "qtensor/error.hpp"

namespace qtensor::coeff {

namespace {

constexpr int kExponentBound = 1'000'000;

void check_exponent([[maybe_unused]] long e) {
  assert(e > -kExponentBound && e < kExponentBound);
}

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  LaurentPoly::Term term(int sign) {
    skip_ws();
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {0, sign * coeff};
      }
    }
    if (at_end() || peek() != 'q') fail(have_coeff ? "expected 'q' after '*'" : "expected term");
    ++pos_;
    long exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      int esign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      std::string d = digits();
      if (d.size() > 7) fail("exponent out of range");
      exp = esign * std::stol(d);
    }
    check_exponent(exp);
    return {static_cast<int>(exp), sign * coeff};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse Laurent polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exp) {
  check_exponent(exp);
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    check_exponent(t.exp);
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

Integer LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    check_exponent(static_cast<long>(t.exp) + k);
    t.exp += k;
  }
  return p;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_exactly(const Integer& d) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
  return p;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (terms_.empty()) return 0;
  if (x == 0 && min_exp() < 0) throw DivisionByZero();
  // Horner in x over [min_exp, max_exp], then scale by x^min_exp.
  Rational acc = 0;
  int prev = max_exp();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int e = prev; e > it->exp; --e) acc *= x;
    acc += Rational(it->coeff);
    prev = it->exp;
  }
  int low = min_exp();
  Rational scale = 1;
  Rational base = low >= 0 ? x : Rational(1) / x;
  for (int e = 0; e < std::abs(low); ++e) scale *= base;
  return acc * scale;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back({b->exp, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly p = a.shifted(b.terms_[0].exp);
    if (b.terms_[0].coeff != 1) p *= b.terms_[0].coeff;
    return p;
  }
  if (a.is_monomial()) return b * a;
  int low = a.min_exp() + b.min_exp();
  int high = a.max_exp() + b.max_exp();
  std::vector<Integer> dense(static_cast<std::size_t>(high - low + 1));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpz_addmul(dense[x.exp + y.exp - low].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  LaurentPoly p;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) p.terms_.push_back({static_cast<int>(i) + low, std::move(dense[i])});
  }
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exp <=> other.terms_[i].exp; c != 0) return c;
    int cmp = ::cmp(terms_[i].coeff, other.terms_[i].coeff);
    if (cmp != 0) return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool negative = it->coeff < 0;
    Integer mag = abs(it->coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (it->exp == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (it->exp != 1) out += "^" + std::to_string(it->exp);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace qtensor::coeff
