#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qtensor/coeff/field.hpp"
#include "qtensor/error.hpp"

namespace qtensor::psiphi {

/// Lexicographically least word in the class of `letters` under
/// far-commutation (letters at distance > 1 commute).
std::vector<int> canonical_letters(const std::vector<int>& letters);

/// Word in generators with indices 1..n-1, stored canonically. Letters are in
/// multiplication order, so the rightmost letter acts first.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<int>& letters) : letters_(canonical_letters(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  /// Largest index used, 0 for the empty word.
  int max_index() const;

  Word shifted(int k) const;
  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
  /// `1,2,3`.
  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

enum class Letter { E, F };

/// Finite linear combination of canonical words in E's or F's. The
/// structural equality is faithful as long as no Serre relation applies,
/// which holds for linear combinations of Coxeter monomials.
template <class S, Letter L>
class WordElement {
 public:
  using Terms = std::map<Word, S>;

  WordElement() = default;
  explicit WordElement(Terms terms) {
    for (auto& [w, c] : terms) {
      if (!coeff::is_zero(c)) terms_.emplace(w, std::move(c));
    }
  }

  static WordElement one(S unit) { return monomial(Word(), std::move(unit)); }
  static WordElement generator(int i, S unit) { return monomial(Word({i}), std::move(unit)); }
  static WordElement monomial(const Word& w, S c) {
    Terms t;
    t.emplace(w, std::move(c));
    return WordElement(std::move(t));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const S* find(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Replace every index i by i + k.
  WordElement shifted(int k) const {
    Terms t;
    for (const auto& [w, c] : terms_) t.emplace(w.shifted(k), c);
    return WordElement(std::move(t));
  }

  /// Number of occurrences of each index 1..max among the letters, when all
  /// words share it (the element is then homogeneous of weight -sum for F,
  /// +sum for E). Throws MixedWeight or ZeroVector.
  std::vector<int> root_content() const {
    if (is_zero()) throw ZeroVector("root_content of zero element");
    auto content = [](const Word& w) {
      std::vector<int> c(static_cast<std::size_t>(w.max_index()), 0);
      for (int i : w.letters()) ++c[static_cast<std::size_t>(i - 1)];
      return c;
    };
    std::vector<int> first = content(terms_.begin()->first);
    for (const auto& [w, c] : terms_) {
      if (content(w) != first) throw MixedWeight("element is not homogeneous");
    }
    return first;
  }

  friend WordElement operator+(const WordElement& a, const WordElement& b) {
    Terms t = a.terms_;
    for (const auto& [w, c] : b.terms_) accumulate(t, w, c);
    return WordElement(std::move(t));
  }
  friend WordElement operator-(const WordElement& a, const WordElement& b) {
    Terms t = a.terms_;
    for (const auto& [w, c] : b.terms_) accumulate(t, w, S(-c));
    return WordElement(std::move(t));
  }
  friend WordElement operator*(const S& s, const WordElement& a) {
    Terms t;
    if (coeff::is_zero(s)) return WordElement();
    for (const auto& [w, c] : a.terms_) t.emplace(w, S(s * c));
    return WordElement(std::move(t));
  }
  friend WordElement operator*(const WordElement& a, const WordElement& b) {
    Terms t;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) accumulate(t, u * v, S(c * d));
    return WordElement(std::move(t));
  }

  bool operator==(const WordElement&) const = default;

  /// `c1 * F[1,2] + c2 * F[2,1]`; zero renders as `0`.
  template <coeff::CoefficientField F>
  std::string to_string(const F& field) const {
    if (is_zero()) return "0";
    std::string out;
    const char* name = L == Letter::F ? "F" : "E";
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += field.render(c) + " * " + name + "[" + w.to_string() + "]";
    }
    return out;
  }

 private:
  static void accumulate(Terms& t, const Word& w, const S& c) {
    auto [it, inserted] = t.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (coeff::is_zero(it->second)) t.erase(it);
    }
  }

  Terms terms_;
};

template <class S>
using NegElement = WordElement<S, Letter::F>;
template <class S>
using PosElement = WordElement<S, Letter::E>;

}  // namespace qtensor::psiphi
