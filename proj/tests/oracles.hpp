#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code under test beyond its value types.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qtensor/coeff/laurent_poly.hpp"
#include "qtensor/coeff/ratfunc.hpp"

namespace oracle {

using qtensor::coeff::LaurentPoly;
using qtensor::coeff::RatFunc;

inline mpq_class rpow(const mpq_class& x, int e) {
  mpq_class acc = 1;
  const mpq_class base = e >= 0 ? x : mpq_class(1 / x);
  for (int i = 0; i < std::abs(e); ++i) acc *= base;
  return acc;
}

/// (x^m - x^-m)/(x - x^-1) straight from the quotient.
inline mpq_class qint_closed(int m, const mpq_class& x) {
  return mpq_class((rpow(x, m) - rpow(x, -m)) / (x - rpow(x, -1)));
}

/// Polynomial built from an exponent -> coefficient table.
inline LaurentPoly poly(const std::map<int, long>& t) {
  std::vector<LaurentPoly::Term> terms;
  for (auto [e, c] : t) terms.push_back({e, mpz_class(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

/// Naive schoolbook product over an exponent map.
inline std::map<int, mpz_class> naive_product(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, mpz_class> out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out[s.exp + t.exp] += s.coeff * t.coeff;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : ++it;
  return out;
}

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 4, int exp_range = 5,
                               int coeff_range = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> ex(-exp_range, exp_range);
  std::uniform_int_distribution<int> co(-coeff_range, coeff_range);
  std::map<int, long> t;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) t[ex(rng)] += co(rng);
  return poly(t);
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng) {
  for (;;) {
    LaurentPoly p = random_poly(rng);
    if (!p.is_zero()) return p;
  }
}

/// Brute-force count of fillings of shape lam with 1..r, rows and columns
/// strictly increasing.
inline long brute_standard(const std::vector<int>& lam) {
  int r = 0;
  for (int p : lam) r += p;
  std::vector<int> filled(lam.size(), 0);
  std::function<long(int)> rec = [&](int next) -> long {
    if (next > r) return 1;
    long total = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      bool ok = filled[i] < lam[i] && (i == 0 || filled[i - 1] > filled[i]);
      if (!ok) continue;
      ++filled[i];
      total += rec(next + 1);
      --filled[i];
    }
    return total;
  };
  return rec(1);
}

/// Brute-force count of semistandard fillings of lam with entries in 1..n.
inline long brute_semistandard(const std::vector<int>& lam, int n) {
  std::vector<std::vector<int>> t;
  for (int p : lam) t.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::function<long(std::size_t)> rec = [&](std::size_t k) -> long {
    if (k == cells.size()) return 1;
    auto [i, j] = cells[k];
    long total = 0;
    for (int v = 1; v <= n; ++v) {
      if (j > 0 && t[i][j - 1] > v) continue;
      if (i > 0 && t[i - 1][j] >= v) continue;
      t[i][j] = v;
      total += rec(k + 1);
    }
    return total;
  };
  return rec(0);
}

}  // namespace oracle

namespace oracle {

/// All of {1..n}^r in lexicographic order.
inline std::vector<std::vector<int>> all_tuples(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 1);
  if (n < 1) return out;
  for (;;) {
    out.push_back(cur);
    int s = r - 1;
    while (s >= 0 && cur[static_cast<std::size_t>(s)] == n) cur[static_cast<std::size_t>(s--)] = 1;
    if (s < 0) break;
    ++cur[static_cast<std::size_t>(s)];
  }
  return out;
}

/// Two-factor Hecke operator on v_a (x) v_b, as (a', b', coefficient) with the
/// coefficient a Laurent polynomial.
struct TwoFactorTerm {
  int a, b;
  LaurentPoly coeff;
};

inline std::vector<TwoFactorTerm> hecke_two_factor(int a, int b) {
  const LaurentPoly q = LaurentPoly::monomial(1, 1);
  const LaurentPoly qi = LaurentPoly::monomial(1, -1);
  if (a == b) return {{a, a, q}};
  if (a > b) return {{b, a, 1}};
  return {{b, a, 1}, {a, b, q - qi}};
}

}  // namespace oracle
