#include "qtensor/tensorspace/tensor_vector.hpp"

namespace qtensor::tensorspace {

namespace {

char to_byte(int letter) {
  if (letter < 0 || letter > 255) throw InvalidArgument("letter " + std::to_string(letter) + " out of range");
  return static_cast<char>(static_cast<unsigned char>(letter));
}

}  // namespace

IndexTuple::IndexTuple(std::initializer_list<int> letters) {
  bytes_.reserve(letters.size());
  for (int a : letters) bytes_.push_back(to_byte(a));
}

IndexTuple::IndexTuple(const std::vector<int>& letters) {
  bytes_.reserve(letters.size());
  for (int a : letters) bytes_.push_back(to_byte(a));
}

std::vector<int> IndexTuple::letters() const {
  std::vector<int> out;
  out.reserve(bytes_.size());
  for (char b : bytes_) out.push_back(static_cast<unsigned char>(b));
  return out;
}

IndexTuple IndexTuple::with(int s, int letter) const {
  IndexTuple t = *this;
  t.bytes_[static_cast<std::size_t>(s - 1)] = to_byte(letter);
  return t;
}

IndexTuple IndexTuple::swapped(int i) const {
  IndexTuple t = *this;
  std::swap(t.bytes_[static_cast<std::size_t>(i - 1)], t.bytes_[static_cast<std::size_t>(i)]);
  return t;
}

IndexTuple IndexTuple::prepended(int letter) const {
  IndexTuple t;
  t.bytes_.reserve(bytes_.size() + 1);
  t.bytes_.push_back(to_byte(letter));
  t.bytes_ += bytes_;
  return t;
}

std::vector<int> IndexTuple::content(int n) const {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (char b : bytes_) {
    int a = static_cast<unsigned char>(b);
    if (a >= 1 && a <= n) ++c[static_cast<std::size_t>(a - 1)];
  }
  return c;
}

std::string IndexTuple::to_string() const {
  bool wide = false;
  for (char b : bytes_) wide = wide || static_cast<unsigned char>(b) > 9;
  std::string out;
  for (std::size_t i = 0; i < bytes_.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(static_cast<unsigned char>(bytes_[i]));
  }
  return out;
}

}  // namespace qtensor::tensorspace
