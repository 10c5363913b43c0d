#pragma once

#include <set>
#include <vector>

#include "qtensor/dualcheck/basis.hpp"
#include "qtensor/dualcheck/linalg.hpp"

namespace qtensor::dualcheck {

template <class S>
struct RootImage {
  int m;
  int j;
  psiphi::NegElement<S> element;
  /// Multiplicities of alpha_1.. in the (negated) weight.
  std::vector<int> root;
  bool vanishes_on_b = false;
};

template <class S>
struct RootVectorReport {
  std::vector<RootImage<S>> images;
  std::size_t expected_count = 0;
  bool distinct_weights = false;
  std::size_t element_rank = 0;
  /// Walk of the maximal vector b the images were applied to.
  Walk b_walk;
  std::size_t nonvanishing = 0;
  std::size_t nonvanishing_rank = 0;

  bool ok() const {
    return images.size() == expected_count && distinct_weights && element_rank == expected_count &&
           nonvanishing_rank == nonvanishing;
  }
};

/// xi_m^lam images for m = 2..n, and their action on a maximal vector of
/// weight lam (the first walk to lam). Needs every alpha_j^vee(lam) != 0.
template <coeff::CoefficientField F>
RootVectorReport<typename F::Scalar> root_vector_check(const Engine<F>& eng, const Partition& lam, int n) {
  using S = typename F::Scalar;
  const auto w = lam.as_weight(n);
  for (int j = 1; j < n; ++j) {
    if (w.coroot(j) == 0)
      throw InvalidArgument("root vectors need alpha_" + std::to_string(j) + " nonzero at " + lam.to_string());
  }
  RootVectorReport<S> rep;
  rep.expected_count = static_cast<std::size_t>(n * (n - 1) / 2);
  for (int m = 2; m <= n; ++m) {
    for (auto& [j, e] : eng.xi_map(m, w)) {
      auto root = e.root_content();
      root.resize(static_cast<std::size_t>(n - 1), 0);
      rep.images.push_back({m, j, e, root});
    }
  }
  std::set<std::vector<int>> weights;
  std::vector<std::map<psiphi::Word, S>> rows;
  for (const auto& img : rep.images) {
    weights.insert(img.root);
    rows.emplace_back(img.element.terms().begin(), img.element.terms().end());
  }
  rep.distinct_weights = weights.size() == rep.images.size();
  rep.element_rank = rank_of(std::move(rows));

  auto walks = combinatorics::enumerate_walks(n, lam.size(), lam);
  if (walks.empty()) throw InvalidArgument("no walk of gl_" + std::to_string(n) + " reaches " + lam.to_string());
  rep.b_walk = walks.front();
  const auto b = eng.build_c_pi(rep.b_walk, n).vector;
  std::vector<std::map<tensorspace::IndexTuple, S>> images;
  for (auto& img : rep.images) {
    auto v = eng.apply(img.element, b);
    img.vanishes_on_b = v.is_zero();
    if (!v.is_zero()) images.emplace_back(v.terms().begin(), v.terms().end());
  }
  rep.nonvanishing = images.size();
  rep.nonvanishing_rank = rank_of(std::move(images));
  return rep;
}

}  // namespace qtensor::dualcheck
