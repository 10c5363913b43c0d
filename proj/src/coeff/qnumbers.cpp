#include "qtensor/coeff/qnumbers.hpp"

#include <cstdlib>

#include "qtensor/error.hpp"

namespace qtensor::coeff {

LaurentPoly qint(int m) {
  int k = std::abs(m);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) terms.push_back({k - 1 - 2 * t, Integer(m > 0 ? 1 : -1)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfact(int m) {
  if (m < 0) throw InvalidArgument("qfact of negative integer " + std::to_string(m));
  LaurentPoly acc = 1;
  for (int i = 2; i <= m; ++i) acc *= qint(i);
  return acc;
}

}  // namespace qtensor::coeff
