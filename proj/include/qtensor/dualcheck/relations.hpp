#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "qtensor/coeff/field.hpp"
#include "qtensor/tensorspace/operators.hpp"
#include "qtensor/util/parallel.hpp"

namespace qtensor::dualcheck {

/// Per-family counts of identities checked and failed.
struct RelationReport {
  struct Tally {
    long checked = 0;
    long failed = 0;
  };
  std::map<std::string, Tally> families;

  bool ok() const {
    for (const auto& [name, t] : families)
      if (t.failed != 0) return false;
    return true;
  }
  void merge(const RelationReport& other) {
    for (const auto& [name, t] : other.families) {
      families[name].checked += t.checked;
      families[name].failed += t.failed;
    }
  }
};

namespace detail {

inline std::vector<int> nth_tuple(std::size_t k, int n, int r) {
  std::vector<int> a(static_cast<std::size_t>(r));
  for (int s = r - 1; s >= 0; --s) {
    a[static_cast<std::size_t>(s)] = static_cast<int>(k % static_cast<std::size_t>(n)) + 1;
    k /= static_cast<std::size_t>(n);
  }
  return a;
}

}  // namespace detail

/// Checks on every standard basis vector of V^{(x) r} for gl_n:
/// the defining relations of U_q(gl_n), the Hecke quadratic and braid
/// relations, and commutation of each E_j, F_j, K~_j with each T_i.
template <coeff::CoefficientField F>
RelationReport relation_suite(const F& field, int n, int r) {
  using S = typename F::Scalar;
  using V = tensorspace::TensorVector<S>;
  using G = tensorspace::Generator;
  std::size_t total = 1;
  for (int s = 0; s < r; ++s) total *= static_cast<std::size_t>(n);
  std::vector<RelationReport> parts(total);
  const S one = field.from_int(1);
  const S q = field.q_power(1), qinv = field.q_power(-1);
  const S bracket2 = field.qint(2);
  const S inv_q_diff = S(one / S(q - qinv));

  util::parallel_for(total, [&](std::size_t k) {
    RelationReport& rep = parts[k];
    auto note = [&rep](const char* family, bool holds) {
      auto& t = rep.families[family];
      ++t.checked;
      if (!holds) ++t.failed;
    };
    const V v = V::basis(n, tensorspace::IndexTuple(detail::nth_tuple(k, n, r)), one);
    auto act = [&](std::initializer_list<G> word) { return tensorspace::apply_word(field, std::vector<G>(word), v); };

    for (int i = 1; i <= n; ++i) {
      note("U1", act({G::Kinv(i), G::K(i)}) == v && act({G::K(i), G::Kinv(i)}) == v);
      for (int j = i + 1; j <= n; ++j) note("U1", act({G::K(i), G::K(j)}) == act({G::K(j), G::K(i)}));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        V lhs = act({G::E(i), G::F(j)}) - act({G::F(j), G::E(i)});
        V rhs = i == j ? inv_q_diff * (act({G::Kt(i)}) - act({G::Ktinv(i)})) : V(n, r);
        note("U2", lhs == rhs);
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        const int h = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
        note("U3", act({G::K(i), G::E(j)}) == field.q_power(h) * act({G::E(j), G::K(i)}));
        note("U3", act({G::K(i), G::F(j)}) == field.q_power(-h) * act({G::F(j), G::K(i)}));
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) == 1) {
          V e = act({G::E(i), G::E(i), G::E(j)}) - bracket2 * act({G::E(i), G::E(j), G::E(i)}) + act({G::E(j), G::E(i), G::E(i)});
          note("U4", e.is_zero());
          V f = act({G::F(i), G::F(i), G::F(j)}) - bracket2 * act({G::F(i), G::F(j), G::F(i)}) + act({G::F(j), G::F(i), G::F(i)});
          note("U6", f.is_zero());
        } else if (std::abs(i - j) > 1) {
          note("U5", act({G::E(i), G::E(j)}) == act({G::E(j), G::E(i)}));
          note("U7", act({G::F(i), G::F(j)}) == act({G::F(j), G::F(i)}));
        }
      }
    }
    auto T = [&](int i, const V& x) { return tensorspace::apply_T(field, i, x); };
    for (int i = 1; i < r; ++i) {
      V t = T(i, v);
      note("hecke quadratic", (T(i, t) - S(q - qinv) * t - v).is_zero());
      if (i + 1 < r) note("braid", T(i, T(i + 1, t)) == T(i + 1, T(i, T(i + 1, v))));
      for (int j = i + 2; j < r; ++j) note("braid", T(j, t) == T(i, T(j, v)));
      for (int j = 1; j < n; ++j) {
        for (G g : {G::E(j), G::F(j), G::Kt(j)}) {
          note("commuting actions", tensorspace::apply_generator(field, g, t) == T(i, tensorspace::apply_generator(field, g, v)));
        }
      }
    }
  });
  RelationReport out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace qtensor::dualcheck
