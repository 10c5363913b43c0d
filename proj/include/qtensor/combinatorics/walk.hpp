#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtensor/combinatorics/partition.hpp"

namespace qtensor::combinatorics {

/// Path emptyset -> pi^(1) -> ... -> pi^(r) in the Bratteli diagram, each
/// step adding one node in the recorded row.
class Walk {
 public:
  Walk() : steps_{Partition()} {}
  /// Throws InvalidArgument when some row is not addable at its step.
  static Walk from_rows(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  /// pi^(0), ..., pi^(r).
  const std::vector<Partition>& steps() const { return steps_; }
  int length() const { return static_cast<int>(rows_.size()); }
  const Partition& shape() const { return steps_.back(); }
  /// Number of rows of the terminal shape.
  int height() const { return shape().length(); }

  Walk extended(int row) const;
  /// The first len steps of this walk.
  Walk prefix(int len) const;

  bool operator==(const Walk& other) const { return rows_ == other.rows_; }
  auto operator<=>(const Walk& other) const { return rows_ <=> other.rows_; }
  /// JSON-style row list, e.g. `[1,2,3]`.
  std::string to_string() const;

 private:
  std::vector<int> rows_;
  std::vector<Partition> steps_;
};

/// All walks of length r in the Bratteli diagram of gl_n, optionally ending at
/// target, in lexicographic order of row sequences.
std::vector<Walk> enumerate_walks(int n, int r, const std::optional<Partition>& target = {});

/// Number of walks / standard tableaux via the hook-length formula.
long long count_standard(const Partition& lam);

/// dim V_q(lam) for gl_n, from the type-A dimension product.
long long weyl_dim(const Partition& lam, int n);

}  // namespace qtensor::combinatorics
