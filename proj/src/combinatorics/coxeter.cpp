#include "qtensor/combinatorics/coxeter.hpp"

#include "qtensor/error.hpp"

namespace qtensor::combinatorics {

std::string CoxeterWord::to_string() const {
  std::string out;
  for (int s : letters) out += std::to_string(s);
  return out;
}

std::vector<CoxeterWord> coxeter_elements(int n) {
  if (n < 2) throw InvalidArgument("coxeter_elements needs n >= 2");
  std::vector<CoxeterWord> level{CoxeterWord{{1}}};
  for (int k = 3; k <= n; ++k) {
    std::vector<CoxeterWord> next;
    next.reserve(level.size() * 2);
    for (const auto& w : level) {
      CoxeterWord shifted;
      for (int s : w.letters) shifted.letters.push_back(s + 1);
      CoxeterWord front{{1}};
      front.letters.insert(front.letters.end(), shifted.letters.begin(), shifted.letters.end());
      CoxeterWord back = shifted;
      back.letters.push_back(1);
      next.push_back(std::move(front));
      next.push_back(std::move(back));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace qtensor::combinatorics
