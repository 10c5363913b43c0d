#pragma once

#include <string>
#include <vector>

#include "qtensor/dualcheck/basis.hpp"
#include "qtensor/dualcheck/linalg.hpp"

namespace qtensor::dualcheck {

template <class S>
struct GramReport {
  Matrix<S> gram;
  /// Walk pairs (row, column) with a nonzero off-diagonal entry.
  std::vector<std::pair<Walk, Walk>> nonzero_off_diagonal;
  std::vector<Walk> zero_diagonal;
  bool ok() const { return nonzero_off_diagonal.empty() && zero_diagonal.empty(); }
};

/// Full Gram matrix of the records' vectors under the bilinear form.
template <class S>
GramReport<S> gram_check(const std::vector<MaximalVectorRecord<S>>& records) {
  const std::size_t k = records.size();
  GramReport<S> rep;
  rep.gram.assign(k, std::vector<S>(k, S(0)));
  util::parallel_for(k, [&](std::size_t i) {
    for (std::size_t j = i; j < k; ++j) rep.gram[i][j] = tensorspace::bilinear(records[i].vector, records[j].vector);
  });
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      rep.gram[j][i] = rep.gram[i][j];
      if (!coeff::is_zero(rep.gram[i][j])) rep.nonzero_off_diagonal.emplace_back(records[i].walk, records[j].walk);
    }
    if (coeff::is_zero(rep.gram[i][i])) rep.zero_diagonal.push_back(records[i].walk);
  }
  return rep;
}

/// rho_m at the weight lam (the weight before the step):
///   q^{1-m} prod_{i=1}^{m-1} [d_i^{+(m-1-i)} + 1] / [d_i^{+(m-1-i)}].
template <coeff::CoefficientField F>
typename F::Scalar rho(const F& field, int m, const combinatorics::Weight& lam) {
  using S = typename F::Scalar;
  S acc = field.q_power(1 - m);
  for (int i = 1; i <= m - 1; ++i) {
    const int d = combinatorics::pairing_constants(lam, i, m - 1 - i).d;
    acc = S(acc * field.qint(d + 1) / field.qint(d));
  }
  return acc;
}

/// Closed-form <c_pi, c_pi>: the product of rho over the steps of pi.
template <coeff::CoefficientField F>
typename F::Scalar norm_predict(const F& field, const Walk& pi) {
  using S = typename F::Scalar;
  S acc = field.from_int(1);
  for (int s = 0; s < pi.length(); ++s) {
    const auto& before = pi.steps()[static_cast<std::size_t>(s)];
    acc = S(acc * rho(field, pi.rows()[static_cast<std::size_t>(s)], before.as_weight()));
  }
  return acc;
}

/// Walks whose predicted norm differs from the computed one.
template <coeff::CoefficientField F>
std::vector<Walk> norm_mismatches(const F& field, const std::vector<MaximalVectorRecord<typename F::Scalar>>& records) {
  std::vector<char> bad(records.size(), 0);
  util::parallel_for(records.size(), [&](std::size_t k) {
    const auto& rec = records[k];
    bad[k] = norm_predict(field, rec.walk) != tensorspace::bilinear(rec.vector, rec.vector);
  });
  std::vector<Walk> out;
  for (std::size_t k = 0; k < records.size(); ++k)
    if (bad[k]) out.push_back(records[k].walk);
  return out;
}

/// Outcome of the three pairing reductions for Psi_j on one maximal b.
struct ReductionFailure {
  Walk walk;
  int j;
  char part;  // 'a', 'b' or 'c'
};

/// For b = c_pi and each j with Psi_j defined:
///   (a) <Psi_j b, Psi_j b> = kappa_j <Psi^+_{j-1} b, Psi^+_{j-1} b>,
///   (b) <Psi_j b, Psi^+_{j-1} F_1 b> = 0                (j >= 2),
///   (c) <Psi_j b, F_1 Psi^+_{j-1} b> = q^{-a_1} <Psi^+_{j-1} b, Psi^+_{j-1} b>  (j >= 2).
template <coeff::CoefficientField F>
std::vector<ReductionFailure> reduction_check(const Engine<F>& eng,
                                              const std::vector<MaximalVectorRecord<typename F::Scalar>>& records) {
  using S = typename F::Scalar;
  const F& f = eng.field();
  std::vector<ReductionFailure> out;
  for (const auto& rec : records) {
    const int n = rec.vector.n();
    const auto lam = rec.weight.as_weight(n);
    const int a1 = lam.coroot(1);
    for (int j = 1; j < n; ++j) {
      if (lam.coroot(j) == 0) continue;
      const auto pj = eng.apply(eng.psi(j, lam), rec.vector);
      const auto pplus = eng.apply(eng.psi(j - 1, lam, 1), rec.vector);
      const auto pc = combinatorics::pairing_constants(lam, j);
      const S base = tensorspace::bilinear(pplus, pplus);
      const S kappa = j == 1 ? S(f.q_power(1 - a1) / f.qint(pc.d)) : S(f.q_power(-a1) * f.qint(pc.c) / f.qint(pc.d));
      if (tensorspace::bilinear(pj, pj) != S(kappa * base)) out.push_back({rec.walk, j, 'a'});
      if (j < 2) continue;
      const auto f1b = tensorspace::apply_generator(f, Generator::F(1), rec.vector);
      const auto shifted_f1b = eng.apply(eng.psi(j - 1, lam, 1), f1b);
      if (!coeff::is_zero(tensorspace::bilinear(pj, shifted_f1b))) out.push_back({rec.walk, j, 'b'});
      const auto f1_pplus = tensorspace::apply_generator(f, Generator::F(1), pplus);
      if (tensorspace::bilinear(pj, f1_pplus) != S(f.q_power(-a1) * base)) out.push_back({rec.walk, j, 'c'});
    }
  }
  return out;
}

}  // namespace qtensor::dualcheck
