#pragma once

#include <string>
#include <vector>

#include "qtensor/coeff/field.hpp"
#include "qtensor/combinatorics/partition.hpp"
#include "qtensor/tensorspace/tensor_vector.hpp"

namespace qtensor::tensorspace {

using combinatorics::Weight;

/// Generators of U_q(gl_n). Kt is K~_i = K_i K_{i+1}^{-1}.
struct Generator {
  enum class Kind { E, F, K, Kinv, Kt, Ktinv };
  Kind kind;
  int index;

  static Generator E(int i) { return {Kind::E, i}; }
  static Generator F(int i) { return {Kind::F, i}; }
  static Generator K(int i) { return {Kind::K, i}; }
  static Generator Kinv(int i) { return {Kind::Kinv, i}; }
  static Generator Kt(int i) { return {Kind::Kt, i}; }
  static Generator Ktinv(int i) { return {Kind::Ktinv, i}; }

  bool operator==(const Generator&) const = default;
  std::string to_string() const;
};

namespace detail {

/// Exponent of K~_i on the single letter a: delta_{a,i} - delta_{a,i+1}.
inline int kt_exponent(int i, int a) { return (a == i ? 1 : 0) - (a == i + 1 ? 1 : 0); }

void check_generator(const Generator& g, int n);

}  // namespace detail

/// Action through the iterated coproduct:
///   E_i = sum_s K~_i^{(x)(s-1)} (x) E_i (x) 1^{(x)(r-s)},
///   F_i = sum_s 1^{(x)(s-1)} (x) F_i (x) (K~_i^{-1})^{(x)(r-s)},
/// with K diagonal. Throws InvalidArgument for an out-of-range index.
template <coeff::CoefficientField F>
TensorVector<typename F::Scalar> apply_generator(const F& field, const Generator& g,
                                                 const TensorVector<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  detail::check_generator(g, v.n());
  const int i = g.index;
  const int r = v.r();
  TensorBuilder<S> out(v.n(), r);
  for (const auto& [a, c] : v.terms()) {
    switch (g.kind) {
      case Generator::Kind::E: {
        int prefix = 0;
        for (int s = 1; s <= r; ++s) {
          if (a[s] == i + 1) out.add(a.with(s, i), field.times_q_power(c, prefix));
          prefix += detail::kt_exponent(i, a[s]);
        }
        break;
      }
      case Generator::Kind::F: {
        int suffix = 0;
        for (int s = r; s >= 1; --s) {
          if (a[s] == i) out.add(a.with(s, i + 1), field.times_q_power(c, -suffix));
          suffix += detail::kt_exponent(i, a[s]);
        }
        break;
      }
      case Generator::Kind::K:
      case Generator::Kind::Kinv: {
        int e = 0;
        for (int s = 1; s <= r; ++s) e += a[s] == i ? 1 : 0;
        out.add(a, field.times_q_power(c, g.kind == Generator::Kind::K ? e : -e));
        break;
      }
      case Generator::Kind::Kt:
      case Generator::Kind::Ktinv: {
        int e = 0;
        for (int s = 1; s <= r; ++s) e += detail::kt_exponent(i, a[s]);
        out.add(a, field.times_q_power(c, g.kind == Generator::Kind::Kt ? e : -e));
        break;
      }
    }
  }
  return std::move(out).build();
}

/// Applies g_1 g_2 ... g_k, i.e. g_k first.
template <coeff::CoefficientField F>
TensorVector<typename F::Scalar> apply_word(const F& field, const std::vector<Generator>& word,
                                            TensorVector<typename F::Scalar> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(field, *it, v);
  return v;
}

/// Right action of the Hecke generator T_i:
///   v_a T_i = q v_a                           if a_i = a_{i+1},
///             v_{a s_i}                       if a_i > a_{i+1},
///             v_{a s_i} + (q - q^-1) v_a      if a_i < a_{i+1}.
template <coeff::CoefficientField F>
TensorVector<typename F::Scalar> apply_T(const F& field, int i,
                                         const TensorVector<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  if (i < 1 || i > v.r() - 1)
    throw InvalidArgument("T_" + std::to_string(i) + " undefined in degree " + std::to_string(v.r()));
  const S q_minus_qinv = S(field.q_power(1) - field.q_power(-1));
  TensorBuilder<S> out(v.n(), v.r());
  for (const auto& [a, c] : v.terms()) {
    if (a[i] == a[i + 1]) {
      out.add(a, field.times_q_power(c, 1));
    } else if (a[i] > a[i + 1]) {
      out.add(a.swapped(i), c);
    } else {
      out.add(a.swapped(i), c);
      out.add(a, S(c * q_minus_qinv));
    }
  }
  return std::move(out).build();
}

/// Common letter content (m_1..m_n) of the support; the unique weight with
/// K_i v = q^{m_i} v. Throws ZeroVector or MixedWeight.
template <class S>
Weight weight_of(const TensorVector<S>& v) {
  if (v.is_zero()) throw ZeroVector("weight_of(0)");
  std::vector<int> w = v.terms().begin()->first.content(v.n());
  for (const auto& [a, c] : v.terms()) {
    if (a.content(v.n()) != w)
      throw MixedWeight("support mixes weights " + Weight(w).to_string() + " and " +
                        Weight(a.content(v.n())).to_string());
  }
  return Weight(std::move(w));
}

/// <u, v> with the standard basis orthonormal.
template <class S>
S bilinear(const TensorVector<S>& u, const TensorVector<S>& v) {
  require_same_space(u, v);
  const auto& small = u.size() <= v.size() ? u : v;
  const auto& large = u.size() <= v.size() ? v : u;
  S acc(0);
  for (const auto& [a, c] : small.terms()) {
    if (const S* other = large.find(a)) acc += S(c * *other);
  }
  return acc;
}

}  // namespace qtensor::tensorspace
