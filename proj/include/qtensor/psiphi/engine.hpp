#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "qtensor/coeff/field.hpp"
#include "qtensor/combinatorics/partition.hpp"
#include "qtensor/combinatorics/walk.hpp"
#include "qtensor/psiphi/word.hpp"
#include "qtensor/tensorspace/operators.hpp"

namespace qtensor::psiphi {

using combinatorics::Partition;
using combinatorics::Walk;
using combinatorics::Weight;
using tensorspace::Generator;
using tensorspace::TensorVector;

/// c_pi together with the walk that produced it.
template <class S>
struct MaximalVectorRecord {
  Walk walk;
  TensorVector<S> vector;
  Partition weight;
};

/// Applies a word element to a tensor vector, the rightmost letter first.
template <coeff::CoefficientField F, Letter L>
TensorVector<typename F::Scalar> apply_element(const F& field,
                                               const WordElement<typename F::Scalar, L>& e,
                                               const TensorVector<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  const auto kind = L == Letter::F ? Generator::Kind::F : Generator::Kind::E;
  // Words sharing a suffix reuse its image.
  std::map<std::vector<int>, TensorVector<S>> suffix_image;
  auto image = [&](const std::vector<int>& letters) -> const TensorVector<S>& {
    std::vector<int> suffix;
    const TensorVector<S>* cur = &v;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      suffix.insert(suffix.begin(), *it);
      auto found = suffix_image.find(suffix);
      if (found == suffix_image.end())
        found = suffix_image.emplace(suffix, tensorspace::apply_generator(field, Generator{kind, *it}, *cur)).first;
      cur = &found->second;
    }
    return *cur;
  };
  tensorspace::TensorBuilder<S> out(v.n(), v.r());
  for (const auto& [w, c] : e.terms()) out.add_scaled(image(w.letters()), c);
  return std::move(out).build();
}

/// The Psi operators, Phi operators and maximal vectors c_pi over one
/// coefficient field. Psi values are memoized; concurrent calls on one
/// engine are safe.
template <coeff::CoefficientField F>
class Engine {
 public:
  using S = typename F::Scalar;
  using Neg = NegElement<S>;
  using Vec = TensorVector<S>;

  explicit Engine(F field = F()) : field_(std::move(field)) {}
  Engine(const Engine& other) : field_(other.field_) {}

  const F& field() const { return field_; }
  S one() const { return field_.from_int(1); }

  /// Psi_j^{+(shift)} at the weight lam. Psi_0 = 1. Throws PsiUndefined when
  /// alpha_{j+shift}^vee(lam) = 0 (or, for non-dominant lam, when some
  /// denominator [d] vanishes).
  Neg psi(int j, const Weight& lam, int shift = 0) const {
    if (j < 0 || shift < 0) throw InvalidArgument("psi needs j >= 0 and shift >= 0");
    if (j == 0) return Neg::one(one());
    Key key{j, shift, {}};
    for (int i = 1; i <= j; ++i) key.coroots.push_back(lam.coroot(i + shift));
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Neg value = compute_psi(j, lam, shift);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(std::move(key), std::move(value)).first->second;
  }
  Neg psi(int j, const Partition& lam, int shift = 0) const { return psi(j, lam.as_weight(), shift); }

  Vec apply(const Neg& e, const Vec& v) const {
    if (!e.is_zero()) {
      int top = 0;
      for (const auto& [w, c] : e.terms()) top = std::max(top, w.max_index());
      if (top >= v.n())
        throw InvalidArgument("F_" + std::to_string(top) + " undefined for gl_" + std::to_string(v.n()));
    }
    return apply_element(field_, e, v);
  }

  /// Phi_m(b) = sum_{j=0}^{m-1} (-q^-1)^j v_{m-j} (x) Psi_j^{+(m-j-1)} b, the
  /// new factor on the left. b must be maximal of weight lam; this is
  /// checked only in debug builds. Throws NotAddable.
  Vec phi(int m, const Weight& lam, const Vec& b) const {
    if (m < 1 || m > b.n())
      throw NotAddable("Phi_" + std::to_string(m) + " undefined for gl_" + std::to_string(b.n()));
    if (m >= 2 && lam.coroot(m - 1) == 0)
      throw NotAddable("row " + std::to_string(m) + " is not addable to " + lam.to_string());
#ifndef NDEBUG
    if (!is_maximal(b) || tensorspace::weight_of(b) != padded(lam, b.n()))
      throw InvalidArgument("phi input is not a maximal vector of weight " + lam.to_string());
#endif
    tensorspace::TensorBuilder<S> out(b.n(), b.r() + 1);
    for (const auto& [letter, op] : phi_formal(m, lam)) out.add(tensorspace::prepend(letter, apply(op, b)));
    return std::move(out).build();
  }

  /// Phi_m with b left formal: pairs (m - j, (-q^-1)^j Psi_j^{+(m-j-1)}).
  std::vector<std::pair<int, Neg>> phi_formal(int m, const Weight& lam) const {
    if (m < 1) throw NotAddable("Phi_m needs m >= 1");
    if (m >= 2 && lam.coroot(m - 1) == 0)
      throw NotAddable("row " + std::to_string(m) + " is not addable to " + lam.to_string());
    std::vector<std::pair<int, Neg>> out;
    for (int j = 0; j < m; ++j) {
      S sign = field_.q_power(-j);
      if (j % 2 == 1) sign = S(-sign);
      out.emplace_back(m - j, sign * psi(j, lam, m - j - 1));
    }
    return out;
  }
  Vec phi(int m, const Partition& lam, const Vec& b) const { return phi(m, lam.as_weight(b.n()), b); }

  /// c_pi = Upsilon_r ... Upsilon_1 (1) inside V^{(x) r} for gl_n.
  MaximalVectorRecord<S> build_c_pi(const Walk& pi, int n) const {
    if (pi.height() > n)
      throw InvalidArgument("walk " + pi.to_string() + " leaves the diagram of gl_" + std::to_string(n));
    Vec v = Vec::unit(n, one());
    for (int s = 0; s < pi.length(); ++s) {
      v = phi(pi.rows()[static_cast<std::size_t>(s)], pi.steps()[static_cast<std::size_t>(s)], v);
    }
    return {pi, std::move(v), pi.shape()};
  }

  /// Records for walk.extended(row) for every addable row, reusing c_walk.
  Vec extend(const MaximalVectorRecord<S>& rec, int row) const { return phi(row, rec.weight, rec.vector); }

  /// Weight vector annihilated by every E_i. Throws ZeroVector.
  bool is_maximal(const Vec& v) const {
    if (v.is_zero()) throw ZeroVector("is_maximal(0)");
    try {
      (void)tensorspace::weight_of(v);
    } catch (const MixedWeight&) {
      return false;
    }
    for (int i = 1; i < v.n(); ++i) {
      if (!tensorspace::apply_generator(field_, Generator::E(i), v).is_zero()) return false;
    }
    return true;
  }

  /// xi_m^lam(v_j) = Psi_{m-j}^{+(j-1)} for j = 1..m-1. Throws NotAddable
  /// unless m >= 2 and alpha_{m-1}^vee(lam) != 0.
  std::vector<std::pair<int, Neg>> xi_map(int m, const Weight& lam) const {
    if (m < 2) throw NotAddable("xi_m needs m >= 2");
    if (lam.coroot(m - 1) == 0)
      throw NotAddable("xi_" + std::to_string(m) + " needs alpha_" + std::to_string(m - 1) + " nonzero at " + lam.to_string());
    std::vector<std::pair<int, Neg>> out;
    for (int j = 1; j < m; ++j) out.emplace_back(j, psi(m - j, lam, j - 1));
    return out;
  }
  std::vector<std::pair<int, Neg>> xi_map(int m, const Partition& lam) const {
    return xi_map(m, lam.as_weight());
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
  }

 private:
  struct Key {
    int j;
    int shift;
    std::vector<int> coroots;
    bool operator<(const Key& o) const {
      return std::tie(j, shift, coroots) < std::tie(o.j, o.shift, o.coroots);
    }
  };

  static Weight padded(const Weight& lam, int n) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i - 1)] = lam[i];
    return Weight(std::move(c));
  }

  Neg compute_psi(int j, const Weight& lam, int shift) const {
    if (lam.coroot(j + shift) == 0)
      throw PsiUndefined("Psi_" + std::to_string(j) + "^{+(" + std::to_string(shift) + ")} undefined: alpha_" +
                         std::to_string(j + shift) + " vanishes at " + lam.to_string());
    const auto pc = combinatorics::pairing_constants(lam, j, shift);
    if (pc.d == 0)
      throw PsiUndefined("Psi_" + std::to_string(j) + "^{+(" + std::to_string(shift) + ")} undefined: [d] = 0 at " +
                         lam.to_string());
    const S inv_d = S(one() / field_.qint(pc.d));
    const Neg f = Neg::generator(1 + shift, one());
    if (j == 1) return inv_d * f;
    const Neg inner = psi(j - 1, lam, shift + 1);
    const S cc = S(field_.qint(pc.c) * inv_d);
    const S cm = S(field_.qint(pc.c - 1) * inv_d);
    return cc * (f * inner) - cm * (inner * f);
  }

  F field_;
  mutable std::mutex mutex_;
  mutable std::map<Key, Neg> cache_;
};

/// Jimbo's root vectors with the pivot k adjacent to i: F^_{ij} (i > j) built
/// with k = i - 1, E^_{ij} (i < j) with k = i + 1.
template <class S>
struct RootVectors {
  std::map<std::pair<int, int>, PosElement<S>> positive;
  std::map<std::pair<int, int>, NegElement<S>> negative;
};

template <coeff::CoefficientField F>
RootVectors<typename F::Scalar> jimbo_root_vectors(const F& field, int n) {
  using S = typename F::Scalar;
  if (n < 2) throw InvalidArgument("root vectors need n >= 2");
  RootVectors<S> out;
  const S one = field.from_int(1);
  const S qm = field.q_power(-1);
  const S qp = field.q_power(1);
  for (int len = 1; len < n; ++len) {
    for (int j = 1; j + len <= n; ++j) {
      const int i = j + len;
      if (len == 1) {
        out.negative.emplace(std::pair{i, j}, NegElement<S>::generator(j, one));
        out.positive.emplace(std::pair{j, i}, PosElement<S>::generator(j, one));
        continue;
      }
      const auto& fk = out.negative.at({i, i - 1});
      const auto& fr = out.negative.at({i - 1, j});
      out.negative.emplace(std::pair{i, j}, fk * fr - qm * (fr * fk));
      const auto& ek = out.positive.at({j, j + 1});
      const auto& er = out.positive.at({j + 1, i});
      out.positive.emplace(std::pair{j, i}, ek * er - qp * (er * ek));
    }
  }
  return out;
}

/// F^_{ij} from the recursion with the pivot chosen by `pivot(i, j)`, which
/// must return some k with j < k < i.
template <coeff::CoefficientField F, class Pivot>
NegElement<typename F::Scalar> jimbo_negative(const F& field, int i, int j, Pivot pivot) {
  using S = typename F::Scalar;
  if (i <= j) throw InvalidArgument("F^_{ij} needs i > j");
  if (i == j + 1) return NegElement<S>::generator(j, field.from_int(1));
  const int k = pivot(i, j);
  if (k <= j || k >= i) throw InvalidArgument("pivot outside (j, i)");
  auto a = jimbo_negative(field, i, k, pivot);
  auto b = jimbo_negative(field, k, j, pivot);
  return a * b - field.q_power(-1) * (b * a);
}

/// E^_{ij} with the pivot chosen by `pivot(i, j)`, some k with i < k < j.
template <coeff::CoefficientField F, class Pivot>
PosElement<typename F::Scalar> jimbo_positive(const F& field, int i, int j, Pivot pivot) {
  using S = typename F::Scalar;
  if (i >= j) throw InvalidArgument("E^_{ij} needs i < j");
  if (j == i + 1) return PosElement<S>::generator(i, field.from_int(1));
  const int k = pivot(i, j);
  if (k <= i || k >= j) throw InvalidArgument("pivot outside (i, j)");
  auto a = jimbo_positive(field, i, k, pivot);
  auto b = jimbo_positive(field, k, j, pivot);
  return a * b - field.q_power(1) * (b * a);
}

}  // namespace qtensor::psiphi
