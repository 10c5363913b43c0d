#pragma once

#include <vector>

#include "qtensor/combinatorics/partition.hpp"
#include "qtensor/combinatorics/walk.hpp"
#include "qtensor/psiphi/engine.hpp"
#include "qtensor/util/parallel.hpp"

namespace qtensor::dualcheck {

using combinatorics::Partition;
using combinatorics::Walk;
using psiphi::Engine;
using psiphi::MaximalVectorRecord;
using tensorspace::Generator;
using tensorspace::TensorVector;

/// c_pi for every walk of length r in the diagram of gl_n, in walk order.
/// Built level by level so each prefix is computed once.
template <coeff::CoefficientField F>
std::vector<MaximalVectorRecord<typename F::Scalar>> maximal_basis(const Engine<F>& eng, int n, int r) {
  using S = typename F::Scalar;
  using Rec = MaximalVectorRecord<S>;
  if (n < 1 || r < 0) throw InvalidArgument("maximal_basis needs n >= 1 and r >= 0");
  std::vector<Rec> level{eng.build_c_pi(Walk(), n)};
  for (int step = 0; step < r; ++step) {
    std::vector<std::pair<std::size_t, int>> jobs;
    for (std::size_t p = 0; p < level.size(); ++p)
      for (int row : combinatorics::addable_rows(level[p].weight, n)) jobs.emplace_back(p, row);
    std::vector<Rec> next(jobs.size(), Rec{Walk(), TensorVector<S>(n, step + 1), Partition()});
    util::parallel_for(jobs.size(), [&](std::size_t k) {
      const auto& [p, row] = jobs[k];
      const Rec& parent = level[p];
      next[k] = Rec{parent.walk.extended(row), eng.extend(parent, row), parent.weight.add_node(row)};
    });
    level = std::move(next);
  }
  return level;
}

/// Records whose shape is a rectangle (n^j): the invariants of degree r.
template <class S>
std::vector<MaximalVectorRecord<S>> invariant_records(const std::vector<MaximalVectorRecord<S>>& basis, int n) {
  std::vector<MaximalVectorRecord<S>> out;
  for (const auto& rec : basis) {
    if (rec.weight.is_rectangle_of_height(n)) out.push_back(rec);
  }
  return out;
}

template <coeff::CoefficientField F>
std::vector<MaximalVectorRecord<typename F::Scalar>> invariants_basis(const Engine<F>& eng, int n, int r) {
  if (r % n != 0) return {};
  return invariant_records(maximal_basis(eng, n, r), n);
}

/// Records of one shape, in walk order.
template <class S>
std::vector<MaximalVectorRecord<S>> records_of_shape(const std::vector<MaximalVectorRecord<S>>& basis,
                                                     const Partition& lam) {
  std::vector<MaximalVectorRecord<S>> out;
  for (const auto& rec : basis) {
    if (rec.weight == lam) out.push_back(rec);
  }
  return out;
}

}  // namespace qtensor::dualcheck
