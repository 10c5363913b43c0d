#include "qtensor/combinatorics/tableau.hpp"

#include <algorithm>

#include "qtensor/error.hpp"

namespace qtensor::combinatorics {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  std::vector<int> seen;
  for (const auto& row : rows_) {
    if (row.empty()) throw InvalidArgument("tableau has an empty row");
    lengths.push_back(static_cast<int>(row.size()));
    seen.insert(seen.end(), row.begin(), row.end());
  }
  (void)Partition(lengths);  // validates the shape
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] != static_cast<int>(k) + 1)
      throw InvalidArgument("tableau labels are not exactly 1..r");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j] <= rows_[i][j - 1])
        throw InvalidArgument("tableau row " + std::to_string(i + 1) + " not increasing");
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j])
        throw InvalidArgument("tableau column " + std::to_string(j + 1) + " not increasing");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lengths));
}

StandardTableau tableau_of(const Walk& pi) {
  std::vector<std::vector<int>> rows;
  for (int step = 1; step <= pi.length(); ++step) {
    int row = pi.rows()[static_cast<std::size_t>(step - 1)];
    if (row > static_cast<int>(rows.size())) rows.resize(static_cast<std::size_t>(row));
    rows[static_cast<std::size_t>(row - 1)].push_back(step);
  }
  return StandardTableau(std::move(rows));
}

Walk walk_of(const StandardTableau& t) {
  int r = 0;
  for (const auto& row : t.rows()) r += static_cast<int>(row.size());
  std::vector<int> rows(static_cast<std::size_t>(r), 0);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    for (int label : t.rows()[i]) rows[static_cast<std::size_t>(label - 1)] = static_cast<int>(i) + 1;
  }
  return Walk::from_rows(std::move(rows));
}

}  // namespace qtensor::combinatorics
