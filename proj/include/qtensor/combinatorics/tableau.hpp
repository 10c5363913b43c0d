#pragma once

#include <vector>

#include "qtensor/combinatorics/partition.hpp"
#include "qtensor/combinatorics/walk.hpp"

namespace qtensor::combinatorics {

/// Filling of a Young diagram; rows()[i][j] is the label at node (i+1, j+1).
class StandardTableau {
 public:
  /// Throws InvalidArgument unless rows increase along rows and columns and
  /// the labels are exactly 1..r.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int entry(int row, int col) const { return rows_.at(row - 1).at(col - 1); }

  bool operator==(const StandardTableau& other) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Enter j into the node added at step j.
StandardTableau tableau_of(const Walk& pi);
/// Inverse bijection: the row containing j is the row added at step j.
Walk walk_of(const StandardTableau& t);

}  // namespace qtensor::combinatorics
