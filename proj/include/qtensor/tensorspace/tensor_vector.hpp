#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qtensor/coeff/ratfunc.hpp"
#include "qtensor/error.hpp"

namespace qtensor::tensorspace {

/// Index tuple a in I(n, r) = {1..n}^r, stored one byte per letter so that
/// byte order is lexicographic order on tuples.
class IndexTuple {
 public:
  IndexTuple() = default;
  IndexTuple(std::initializer_list<int> letters);
  explicit IndexTuple(const std::vector<int>& letters);

  int size() const { return static_cast<int>(bytes_.size()); }
  /// a_s, 1-based.
  int operator[](int s) const { return static_cast<unsigned char>(bytes_[static_cast<std::size_t>(s - 1)]); }
  std::vector<int> letters() const;

  IndexTuple with(int s, int letter) const;
  /// a . s_i: interchange places i and i+1.
  IndexTuple swapped(int i) const;
  /// (letter, a_1, ..., a_r).
  IndexTuple prepended(int letter) const;
  /// Multiplicity of each letter 1..n.
  std::vector<int> content(int n) const;

  bool operator==(const IndexTuple&) const = default;
  std::strong_ordering operator<=>(const IndexTuple& other) const {
    int c = bytes_.compare(other.bytes_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  /// `v_{321}`-style shorthand without the v: `321`, or `3,2,1` when n > 9.
  std::string to_string() const;

 private:
  std::string bytes_;
};

/// Finitely supported map I(n, r) -> S, an element of V^{(x) r}. Values never
/// change after construction; zero coefficients are never stored.
template <class S>
class TensorVector {
 public:
  using Terms = std::map<IndexTuple, S>;

  /// The zero vector of V^{(x) r} for gl_n.
  TensorVector(int n, int r) : n_(n), r_(r) {
    if (n < 1 || r < 0) throw InvalidArgument("tensor space needs n >= 1 and r >= 0");
  }
  /// Validates key shapes and drops zero coefficients.
  TensorVector(int n, int r, Terms terms) : TensorVector(n, r) {
    for (auto& [key, value] : terms) {
      check_key(key);
      if (!coeff::is_zero(value)) terms_.emplace(key, std::move(value));
    }
  }

  static TensorVector basis(int n, const IndexTuple& a, S one) {
    Terms t;
    t.emplace(a, std::move(one));
    return TensorVector(n, a.size(), std::move(t));
  }
  /// The unit 1 of the zeroth tensor power.
  static TensorVector unit(int n, S one) { return basis(n, IndexTuple(), std::move(one)); }

  int n() const { return n_; }
  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Coefficient of v_a, nullptr when absent (zero).
  const S* find(const IndexTuple& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Same vector regarded in V^{(x) r} for gl_m, m >= every letter used.
  TensorVector with_rank(int m) const {
    TensorVector v(m, r_);
    for (const auto& [key, value] : terms_) {
      v.check_key(key);
      v.terms_.emplace(key, value);
    }
    return v;
  }

  bool operator==(const TensorVector& other) const = default;

 private:
  void check_key(const IndexTuple& key) const {
    if (key.size() != r_) throw InvalidArgument("index tuple " + key.to_string() + " not of length " + std::to_string(r_));
    for (int s = 1; s <= r_; ++s) {
      if (key[s] < 1 || key[s] > n_)
        throw InvalidArgument("index tuple " + key.to_string() + " has letter outside 1.." + std::to_string(n_));
    }
  }

  int n_;
  int r_;
  Terms terms_;
};

/// Mutable accumulator used to build TensorVectors term by term.
template <class S>
class TensorBuilder {
 public:
  TensorBuilder(int n, int r) : n_(n), r_(r) {}

  void add(const IndexTuple& a, const S& c) {
    if (coeff::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) it->second += c;
  }
  void add(const TensorVector<S>& v) {
    for (const auto& [a, c] : v.terms()) add(a, c);
  }
  void add_scaled(const TensorVector<S>& v, const S& scale) {
    if (coeff::is_zero(scale)) return;
    for (const auto& [a, c] : v.terms()) add(a, S(c * scale));
  }

  TensorVector<S> build() && { return TensorVector<S>(n_, r_, std::move(terms_)); }

 private:
  int n_;
  int r_;
  typename TensorVector<S>::Terms terms_;
};

/// Shape check shared by binary operations.
template <class S>
void require_same_space(const TensorVector<S>& u, const TensorVector<S>& v) {
  if (u.n() != v.n() || u.r() != v.r())
    throw InvalidArgument("tensor shape mismatch: (n=" + std::to_string(u.n()) + ", r=" +
                          std::to_string(u.r()) + ") vs (n=" + std::to_string(v.n()) +
                          ", r=" + std::to_string(v.r()) + ")");
}

template <class S>
TensorVector<S> operator+(const TensorVector<S>& u, const TensorVector<S>& v) {
  require_same_space(u, v);
  TensorBuilder<S> b(u.n(), u.r());
  b.add(u);
  b.add(v);
  return std::move(b).build();
}

template <class S>
TensorVector<S> operator-(const TensorVector<S>& u, const TensorVector<S>& v) {
  require_same_space(u, v);
  TensorBuilder<S> b(u.n(), u.r());
  b.add(u);
  for (const auto& [a, c] : v.terms()) b.add(a, S(-c));
  return std::move(b).build();
}

template <class S>
TensorVector<S> operator*(const S& scale, const TensorVector<S>& v) {
  TensorBuilder<S> b(v.n(), v.r());
  b.add_scaled(v, scale);
  return std::move(b).build();
}

/// v_letter (x) v: the new factor goes on the left.
template <class S>
TensorVector<S> prepend(int letter, const TensorVector<S>& v) {
  typename TensorVector<S>::Terms t;
  for (const auto& [a, c] : v.terms()) t.emplace(a.prepended(letter), c);
  return TensorVector<S>(v.n(), v.r() + 1, std::move(t));
}

}  // namespace qtensor::tensorspace
