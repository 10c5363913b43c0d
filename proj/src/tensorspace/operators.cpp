#include "qtensor/tensorspace/operators.hpp"

namespace qtensor::tensorspace {

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::E: return "E" + std::to_string(index);
    case Kind::F: return "F" + std::to_string(index);
    case Kind::K: return "K" + std::to_string(index);
    case Kind::Kinv: return "K" + std::to_string(index) + "^-1";
    case Kind::Kt: return "Kt" + std::to_string(index);
    case Kind::Ktinv: return "Kt" + std::to_string(index) + "^-1";
  }
  return "?";
}

namespace detail {

void check_generator(const Generator& g, int n) {
  const bool diagonal = g.kind == Generator::Kind::K || g.kind == Generator::Kind::Kinv;
  const int top = diagonal ? n : n - 1;
  if (g.index < 1 || g.index > top)
    throw InvalidArgument(g.to_string() + " undefined for gl_" + std::to_string(n));
}

}  // namespace detail

}  // namespace qtensor::tensorspace
