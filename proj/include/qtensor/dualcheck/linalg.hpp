#pragma once

#include <map>
#include <vector>

#include "qtensor/coeff/ratfunc.hpp"
#include "qtensor/error.hpp"

namespace qtensor::dualcheck {

/// Dense square or rectangular matrix, row-major.
template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
Matrix<S> identity_matrix(std::size_t n) {
  Matrix<S> m(n, std::vector<S>(n, S(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = S(1);
  return m;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix<S> c(rows, std::vector<S>(cols, S(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw InvalidArgument("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (coeff::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!coeff::is_zero(b[k][j])) c[i][j] += S(a[i][k] * b[k][j]);
      }
    }
  }
  return c;
}

template <class S>
Matrix<S> affine(const Matrix<S>& m, const S& scale, const S& shift) {
  Matrix<S> out = m;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto& x : out[i]) x = S(x * scale);
    out[i][i] += shift;
  }
  return out;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!coeff::is_zero(x)) return false;
  return true;
}

/// Rank of a family of sparse vectors by exact Gaussian elimination.
template <class Key, class S>
std::size_t rank_of(std::vector<std::map<Key, S>> rows) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    // rows[i] is reduced against the earlier pivots already; take its
    // leading key as a new pivot and clear it from the later rows.
    const Key pivot = rows[i].begin()->first;
    const S lead = rows[i].begin()->second;
    ++rank;
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      auto it = rows[k].find(pivot);
      if (it == rows[k].end()) continue;
      const S factor = S(it->second / lead);
      for (const auto& [key, value] : rows[i]) {
        S& slot = rows[k][key];
        slot -= S(factor * value);
        if (coeff::is_zero(slot)) rows[k].erase(key);
      }
    }
  }
  return rank;
}

}  // namespace qtensor::dualcheck
