#include "qtensor/psiphi/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace qtensor::psiphi {

std::vector<int> canonical_letters(const std::vector<int>& letters) {
  // Repeatedly pull out the smallest letter that commutes past everything
  // in front of it. This yields the least representative of the class.
  std::vector<int> rest = letters;
  std::vector<int> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool movable = true;
      for (std::size_t t = 0; t < p && movable; ++t) movable = std::abs(rest[t] - rest[p]) > 1;
      if (movable && (best == rest.size() || rest[p] < rest[best])) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

int Word::max_index() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::shifted(int k) const {
  std::vector<int> l = letters_;
  for (int& i : l) {
    i += k;
    if (i < 1) throw InvalidArgument("shift moves a letter below 1");
  }
  Word w;
  w.letters_ = std::move(l);  // shifting preserves canonical form
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<int> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return Word(l);
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

}  // namespace qtensor::psiphi
