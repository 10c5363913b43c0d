#pragma once

#include <json.hpp>
#include <vector>

#include "qtensor/dualcheck/gram.hpp"

namespace qtensor::dualcheck {

struct ShapeRow {
  Partition shape;
  long long weyl_dim = 0;
  long long f = 0;
  long long walks = 0;
  bool all_maximal = false;
  bool gram_diagonal_ok = false;
};

struct DecompositionReport {
  int n = 0;
  int r = 0;
  std::vector<ShapeRow> shapes;
  /// Sum over shapes of weyl_dim * f.
  long long total = 0;
  long long maximal_vectors = 0;
  /// total == n^r and the record count == sum of f.
  bool identity_ok = false;
};

/// Per-shape table for V^{(x) r}, computed from an already built basis.
template <coeff::CoefficientField F>
DecompositionReport decomposition_from_basis(const Engine<F>& eng, int n, int r,
                                             const std::vector<MaximalVectorRecord<typename F::Scalar>>& basis) {
  DecompositionReport rep;
  rep.n = n;
  rep.r = r;
  long long sum_f = 0;
  for (const auto& lam : combinatorics::partitions_of(r, n)) {
    ShapeRow row;
    row.shape = lam;
    row.weyl_dim = combinatorics::weyl_dim(lam, n);
    row.f = combinatorics::count_standard(lam);
    auto recs = records_of_shape(basis, lam);
    row.walks = static_cast<long long>(recs.size());
    row.all_maximal = true;
    for (const auto& rec : recs) row.all_maximal = row.all_maximal && eng.is_maximal(rec.vector);
    row.gram_diagonal_ok = gram_check(recs).ok();
    rep.total += row.weyl_dim * row.f;
    sum_f += row.f;
    rep.shapes.push_back(std::move(row));
  }
  rep.maximal_vectors = static_cast<long long>(basis.size());
  long long power = 1;
  for (int s = 0; s < r; ++s) power *= n;
  rep.identity_ok = rep.total == power && rep.maximal_vectors == sum_f;
  return rep;
}

template <coeff::CoefficientField F>
DecompositionReport decomposition_report(const Engine<F>& eng, int n, int r) {
  return decomposition_from_basis(eng, n, r, maximal_basis(eng, n, r));
}

inline nlohmann::ordered_json to_json(const DecompositionReport& rep) {
  nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
  for (const auto& row : rep.shapes) {
    nlohmann::ordered_json s;
    s["shape"] = row.shape.parts();
    s["weyl_dim"] = row.weyl_dim;
    s["f"] = row.f;
    s["walks"] = row.walks;
    s["all_maximal"] = row.all_maximal;
    s["gram_diagonal_ok"] = row.gram_diagonal_ok;
    shapes.push_back(std::move(s));
  }
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["shapes"] = std::move(shapes);
  j["total"] = rep.total;
  j["maximal_vectors"] = rep.maximal_vectors;
  j["identity_ok"] = rep.identity_ok;
  return j;
}

struct YoungsRuleReport {
  long long lhs = 0;  // n * dim V(lam)
  long long rhs = 0;  // sum over addable rows of dim V(lam + e_j)
  std::vector<int> rows;
  bool ok() const { return lhs == rhs; }
};

inline YoungsRuleReport youngs_rule_check(const Partition& lam, int n) {
  if (lam.length() > n) throw InvalidArgument(lam.to_string() + " has more than " + std::to_string(n) + " parts");
  YoungsRuleReport rep;
  rep.lhs = n * combinatorics::weyl_dim(lam, n);
  rep.rows = combinatorics::addable_rows(lam, n);
  for (int j : rep.rows) rep.rhs += combinatorics::weyl_dim(lam.add_node(j), n);
  return rep;
}

}  // namespace qtensor::dualcheck
