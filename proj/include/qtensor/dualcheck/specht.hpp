#pragma once

#include <vector>

#include "qtensor/dualcheck/basis.hpp"
#include "qtensor/dualcheck/linalg.hpp"

namespace qtensor::dualcheck {

/// Matrices of T_1..T_{r-1} on span{c_pi | pi -> lam}, row convention:
/// c_pi T_i = sum_pi' t_matrices[i-1][pi][pi'] c_pi'.
template <class S>
struct SpechtData {
  Partition shape;
  std::vector<MaximalVectorRecord<S>> basis;
  std::vector<S> gram_diagonal;
  std::vector<Matrix<S>> t_matrices;
  /// T_i indices whose projection left a nonzero residual.
  std::vector<int> residual_failures;
  bool quadratic_ok = false;
  bool braid_ok = false;

  bool ok() const { return residual_failures.empty() && quadratic_ok && braid_ok; }
};

/// Coordinates of c_pi T_i by orthogonal projection onto the c_pi', with an
/// exact zero-residual check.
template <coeff::CoefficientField F>
SpechtData<typename F::Scalar> specht_from_basis(const F& field, const Partition& lam,
                                                 std::vector<MaximalVectorRecord<typename F::Scalar>> basis, int r) {
  using S = typename F::Scalar;
  SpechtData<S> data;
  data.shape = lam;
  data.basis = std::move(basis);
  const std::size_t k = data.basis.size();
  for (const auto& rec : data.basis) {
    S g = tensorspace::bilinear(rec.vector, rec.vector);
    if (coeff::is_zero(g)) throw ConsistencyFailure("zero norm for c_" + rec.walk.to_string());
    data.gram_diagonal.push_back(std::move(g));
  }
  data.t_matrices.assign(static_cast<std::size_t>(std::max(r - 1, 0)), Matrix<S>(k, std::vector<S>(k, S(0))));
  std::vector<char> residual_bad(data.t_matrices.size(), 0);
  util::parallel_for(data.t_matrices.size() * k, [&](std::size_t job) {
    const std::size_t i = job / k;
    const std::size_t p = job % k;
    const auto image = tensorspace::apply_T(field, static_cast<int>(i) + 1, data.basis[p].vector);
    tensorspace::TensorBuilder<S> residual(image.n(), image.r());
    residual.add(image);
    for (std::size_t pp = 0; pp < k; ++pp) {
      const S coord = S(tensorspace::bilinear(image, data.basis[pp].vector) / data.gram_diagonal[pp]);
      if (!coeff::is_zero(coord)) residual.add_scaled(data.basis[pp].vector, S(-coord));
      data.t_matrices[i][p][pp] = coord;
    }
    if (!std::move(residual).build().is_zero()) residual_bad[i] = 1;
  });
  for (std::size_t i = 0; i < residual_bad.size(); ++i)
    if (residual_bad[i]) data.residual_failures.push_back(static_cast<int>(i) + 1);

  // (T - q)(T + q^-1) = 0.
  const S q = field.q_power(1), qinv = field.q_power(-1), one = field.from_int(1);
  data.quadratic_ok = true;
  for (const auto& t : data.t_matrices) {
    if (!is_zero_matrix(affine(t, one, S(-q)) * affine(t, one, qinv))) data.quadratic_ok = false;
  }
  data.braid_ok = true;
  const std::size_t m = data.t_matrices.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& ta = data.t_matrices[a];
      const auto& tb = data.t_matrices[b];
      bool holds = b == a + 1 ? ta * tb * ta == tb * ta * tb : ta * tb == tb * ta;
      if (!holds) data.braid_ok = false;
    }
  }
  return data;
}

template <coeff::CoefficientField F>
SpechtData<typename F::Scalar> specht_matrices(const Engine<F>& eng, const Partition& lam, int n, int r) {
  if (lam.size() != r || lam.length() > n)
    throw InvalidArgument("shape " + lam.to_string() + " is not a partition of " + std::to_string(r) + " into at most " +
                          std::to_string(n) + " parts");
  std::vector<MaximalVectorRecord<typename F::Scalar>> basis;
  for (const auto& w : combinatorics::enumerate_walks(n, r, lam)) basis.push_back(eng.build_c_pi(w, n));
  return specht_from_basis(eng.field(), lam, std::move(basis), r);
}

}  // namespace qtensor::dualcheck
