#pragma once

#include <vector>

#include "qtensor/dualcheck/basis.hpp"

namespace qtensor::dualcheck {

struct RaisingFailure {
  Walk walk;
  int m;
  int j;  // the E_j that misbehaved
};

/// For b = c_pi of weight lam and each m < n with alpha_m^vee(lam) != 0:
/// E_1 Psi_m b = Psi^+_{m-1} b and E_j Psi_m b = 0 for 1 < j <= m.
template <coeff::CoefficientField F>
std::vector<RaisingFailure> raising_check(const Engine<F>& eng,
                                          const std::vector<MaximalVectorRecord<typename F::Scalar>>& records) {
  const F& f = eng.field();
  std::vector<RaisingFailure> out;
  for (const auto& rec : records) {
    const int n = rec.vector.n();
    const auto lam = rec.weight.as_weight(n);
    for (int m = 1; m < n; ++m) {
      if (lam.coroot(m) == 0) continue;
      const auto pb = eng.apply(eng.psi(m, lam), rec.vector);
      if (tensorspace::apply_generator(f, Generator::E(1), pb) != eng.apply(eng.psi(m - 1, lam, 1), rec.vector))
        out.push_back({rec.walk, m, 1});
      for (int j = 2; j <= m; ++j) {
        if (!tensorspace::apply_generator(f, Generator::E(j), pb).is_zero()) out.push_back({rec.walk, m, j});
      }
    }
  }
  return out;
}

}  // namespace qtensor::dualcheck
