#pragma once

#include <string>
#include <vector>

namespace qtensor::combinatorics {

/// Reduced word s_{i_1} ... s_{i_{n-1}} using each simple reflection of W_n once.
struct CoxeterWord {
  std::vector<int> letters;

  bool operator==(const CoxeterWord&) const = default;
  auto operator<=>(const CoxeterWord&) const = default;
  /// Concatenated letters, e.g. `1342`.
  std::string to_string() const;
};

/// The distinguished words I_{n-1} for gl_n, built by
/// I_k = { s_1 w^+ } u { w^+ s_1 }, w in I_{k-1}, interleaved per w.
/// Exactly 2^{n-2} words; throws InvalidArgument for n < 2.
std::vector<CoxeterWord> coxeter_elements(int n);

}  // namespace qtensor::combinatorics
