#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "qtensor/coeff/qnumbers.hpp"
#include "qtensor/combinatorics/coxeter.hpp"
#include "qtensor/psiphi/engine.hpp"
#include "reference_vectors.hpp"

using namespace qtensor;
using namespace qtensor::coeff;
using namespace qtensor::psiphi;
using qtensor::tensorspace::IndexTuple;

namespace {

using Neg = NegElement<RatFunc>;
using V = TensorVector<RatFunc>;

RatFunc qp(int e) { return RatFunc::q_power(e); }
RatFunc qi(int m) { return RatFunc(qint(m)); }

Neg word(std::vector<int> letters, RatFunc c = 1) { return Neg::monomial(Word(letters), std::move(c)); }

V basis(int n, std::vector<int> a) { return V::basis(n, IndexTuple(a), RatFunc(1)); }

int ipow2(int e) { return 1 << e; }

/// Weights with all coroots alpha_1..alpha_len at least 1, last entry 0.
std::vector<Weight> strictly_dominant(std::mt19937& rng, int len, int count) {
  std::vector<Weight> out;
  std::uniform_int_distribution<int> gap(1, 3);
  for (int k = 0; k < count; ++k) {
    std::vector<int> c(static_cast<std::size_t>(len + 1), 0);
    for (int i = len - 1; i >= 0; --i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i + 1)] + gap(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_SUITE("psiphi") {

TEST_CASE("canonical words under far commutation") {
  CHECK(Word({3, 1, 2}).letters() == std::vector<int>{1, 3, 2});
  CHECK(Word({2, 3, 1}).letters() == std::vector<int>{2, 1, 3});
  CHECK(Word({2, 1}).letters() == std::vector<int>{2, 1});
  CHECK(Word({3, 1}).letters() == std::vector<int>{1, 3});
  CHECK(Word({4, 2, 3, 1}).letters() == std::vector<int>{2, 1, 4, 3});
  CHECK(Word({1, 3, 1}).letters() == std::vector<int>{1, 1, 3});
  CHECK(Word({2, 1}) * Word({3}) == Word({2, 1, 3}));
  CHECK(Word({1, 2}).shifted(2) == Word({3, 4}));
}

TEST_CASE("canonical form is a class invariant") {
  // Every adjacent swap of far letters preserves the canonical form, and the
  // form is the least element of the class found by exhaustive search.
  for (const auto& a : oracle::all_tuples(4, 4)) {
    std::set<std::vector<int>> cls{a};
    std::vector<std::vector<int>> todo{a};
    while (!todo.empty()) {
      auto w = todo.back();
      todo.pop_back();
      for (std::size_t s = 0; s + 1 < w.size(); ++s) {
        if (std::abs(w[s] - w[s + 1]) <= 1) continue;
        auto u = w;
        std::swap(u[s], u[s + 1]);
        if (cls.insert(u).second) todo.push_back(u);
      }
    }
    for (const auto& w : cls) CHECK(canonical_letters(w) == *cls.begin());
  }
}

TEST_CASE("coxeter words are pairwise inequivalent") {
  for (int n = 2; n <= 7; ++n) {
    std::set<Word> seen;
    for (const auto& w : combinatorics::coxeter_elements(n)) seen.insert(Word(w.letters));
    CHECK(seen.size() == static_cast<std::size_t>(ipow2(n - 2)));
  }
}

TEST_CASE("word element arithmetic and rendering") {
  Neg a = word({1, 2}, qp(1)) + word({2, 1}, -1);
  CHECK(a.size() == 2);
  CHECK((a - a).is_zero());
  CHECK(a.to_string(GenericField()) == "q * F[1,2] + -1 * F[2,1]");
  CHECK(Neg().to_string(GenericField()) == "0");
  CHECK(word({1}) * word({3}) == word({3}) * word({1}));
  CHECK(a.shifted(1) == word({2, 3}, qp(1)) + word({3, 2}, -1));
  CHECK(a.root_content() == std::vector<int>{1, 1});
  CHECK_THROWS_AS((word({1}) + word({2})).root_content(), MixedWeight);
}

TEST_CASE("psi examples") {
  Engine<GenericField> eng;
  CHECK(eng.psi(1, Partition({2, 1})) == word({1}));
  CHECK(eng.psi(0, Partition({2, 2})) == Neg::one(1));
  CHECK_THROWS_AS(eng.psi(1, Partition({2, 2})), PsiUndefined);
  CHECK_THROWS_AS(eng.psi(2, Partition({2, 1, 1})), PsiUndefined);
  // d_2 = 3 and d_1^+ = 1 at (2,1,0).
  const RatFunc pre = RatFunc(1) / (qi(3) * qi(1));
  CHECK(eng.psi(2, Partition({2, 1})) == pre * (qi(2) * word({1, 2}) - qi(1) * word({2, 1})));
}

TEST_CASE("psi_2 and psi_3 closed forms") {
  Engine<GenericField> eng;
  std::mt19937 rng(31);
  for (const auto& lam : strictly_dominant(rng, 4, 12)) {
    int d1p = combinatorics::pairing_constants(lam, 1, 1).d;
    int d2 = combinatorics::pairing_constants(lam, 2).d;
    CHECK(eng.psi(2, lam) ==
          (RatFunc(1) / (qi(d2) * qi(d1p))) * (qi(1 + d1p) * word({1, 2}) - qi(d1p) * word({2, 1})));
    int d3 = combinatorics::pairing_constants(lam, 3).d;
    int d2p = combinatorics::pairing_constants(lam, 2, 1).d;
    int d1pp = combinatorics::pairing_constants(lam, 1, 2).d;
    RatFunc x1 = qi(1 + d2p) * qi(1 + d1pp), x2 = qi(1 + d2p) * qi(d1pp);
    RatFunc x3 = qi(d2p) * qi(1 + d1pp), x4 = qi(d2p) * qi(d1pp);
    Neg expect = (RatFunc(1) / (qi(d3) * qi(d2p) * qi(d1pp))) *
                 (x1 * word({1, 2, 3}) - x2 * word({1, 3, 2}) - x3 * word({2, 3, 1}) + x4 * word({3, 2, 1}));
    CHECK(eng.psi(3, lam) == expect);
  }
  CHECK(eng.cache_size() > 0);
}

TEST_CASE("psi is supported on coxeter monomials") {
  Engine<GenericField> eng;
  std::mt19937 rng(37);
  for (int j = 1; j <= 5; ++j) {
    std::set<Word> cox;
    for (const auto& w : combinatorics::coxeter_elements(j + 1)) cox.insert(Word(w.letters));
    for (const auto& lam : strictly_dominant(rng, j + 1, 4)) {
      Neg p = eng.psi(j, lam);
      CHECK(!p.is_zero());
      CHECK(p.size() <= static_cast<std::size_t>(ipow2(j - 1)));
      for (const auto& [w, c] : p.terms()) CHECK(cox.count(w) == 1);
      CHECK(p.root_content() == std::vector<int>(static_cast<std::size_t>(j), 1));
    }
  }
}

TEST_CASE("shifted psi uses shifted pairings") {
  Engine<GenericField> eng;
  Weight lam({5, 3, 2, 0});
  Weight dropped({3, 2, 0});
  for (int j = 1; j <= 2; ++j) CHECK(eng.psi(j, lam, 1) == eng.psi(j, dropped).shifted(1));
}

TEST_CASE("lambda minus alpha_1 identities") {
  Engine<GenericField> eng;
  std::mt19937 rng(41);
  for (int j = 1; j <= 3; ++j) {
    for (const auto& lam : strictly_dominant(rng, j + 3, 6)) {
      Weight low = lam.minus_alpha(1);
      auto pp = combinatorics::pairing_constants(lam, j, 2);
      CHECK(pp == combinatorics::pairing_constants(low, j, 2));
      auto p = combinatorics::pairing_constants(lam, j, 1);
      auto pl = combinatorics::pairing_constants(low, j, 1);
      CHECK(p.d + 1 == pl.d);
      CHECK(p.c == pl.c);
      CHECK(eng.psi(j, lam, 2) == eng.psi(j, low, 2));
      CHECK(eng.psi(j, lam, 1) == (qi(p.d + 1) / qi(p.d)) * eng.psi(j, low, 1));
    }
  }
}

TEST_CASE("apply_neg examples") {
  Engine<GenericField> eng;
  V v = basis(2, {1});
  CHECK(eng.apply(Neg::one(1), v) == v);
  CHECK(eng.apply(word({1}), v) == basis(2, {2}));
  CHECK(eng.apply(eng.psi(1, Partition({1})), v) == basis(2, {2}));
  CHECK_THROWS_AS(eng.apply(word({2}), v), InvalidArgument);
}

TEST_CASE("phi examples") {
  Engine<GenericField> eng;
  const auto refs = reference::small_walk_vectors();
  auto ref = [&](std::vector<int> w, int n) {
    for (const auto& e : refs)
      if (e.walk == w) return reference::as_vector(GenericField(), e, n);
    throw std::logic_error("no reference");
  };
  CHECK(eng.phi(2, Partition({1}), basis(2, {1})) == ref({1, 2}, 2));
  CHECK(eng.phi(2, Partition({2}), basis(2, {1, 1})) == ref({1, 1, 2}, 2));
  CHECK(eng.phi(3, Partition({1, 1}), ref({1, 2}, 3)) == ref({1, 2, 3}, 3));
  CHECK(eng.phi(1, Partition(), V::unit(2, 1)) == basis(2, {1}));
  CHECK_THROWS_AS(eng.phi(2, Partition({1, 1}), ref({1, 2}, 2)), NotAddable);
  CHECK_THROWS_AS(eng.phi(3, Partition({1, 1}), ref({1, 2}, 2)), NotAddable);
#ifndef NDEBUG
  CHECK_THROWS_AS(eng.phi(1, Partition({1, 1}), basis(2, {1, 2})), InvalidArgument);
#endif
}

TEST_CASE("build_c_pi reproduces the hand-expanded vectors") {
  Engine<GenericField> eng;
  for (int n = 3; n <= 4; ++n) {
    for (const auto& e : reference::small_walk_vectors()) {
      auto rec = eng.build_c_pi(combinatorics::Walk::from_rows(e.walk), n);
      CHECK(rec.vector == reference::as_vector(GenericField(), e, n));
      CHECK(rec.weight == rec.walk.shape());
    }
  }
  CHECK_THROWS_AS(eng.build_c_pi(combinatorics::Walk::from_rows({1, 2, 3}), 2), InvalidArgument);
  CHECK(eng.build_c_pi(combinatorics::Walk(), 2).vector == V::unit(2, 1));
}

TEST_CASE("is_maximal") {
  Engine<GenericField> eng;
  V c = V(2, 2, V::Terms{{IndexTuple{2, 1}, 1}, {IndexTuple{1, 2}, -qp(-1)}});
  CHECK(eng.is_maximal(c));
  CHECK_FALSE(eng.is_maximal(basis(2, {1, 2})));
  CHECK(eng.is_maximal(basis(2, {1, 1})));
  CHECK_FALSE(eng.is_maximal(basis(2, {1, 1}) + basis(2, {1, 2})));
  CHECK_THROWS_AS(eng.is_maximal(V(2, 2)), ZeroVector);
  for (int r = 0; r <= 4; ++r)
    for (const auto& w : combinatorics::enumerate_walks(3, r)) CHECK(eng.is_maximal(eng.build_c_pi(w, 3).vector));
}

TEST_CASE("E_1 Psi_m b = Psi^+_{m-1} b and higher E_j kill Psi_m b") {
  Engine<GenericField> eng;
  const GenericField& f = eng.field();
  for (int n = 2; n <= 4; ++n) {
    for (int r = 0; r <= 5; ++r) {
      for (const auto& w : combinatorics::enumerate_walks(n, r)) {
        auto rec = eng.build_c_pi(w, n);
        Weight lam = rec.weight.as_weight(n);
        for (int m = 1; m < n; ++m) {
          if (lam.coroot(m) == 0) continue;
          V pb = eng.apply(eng.psi(m, lam), rec.vector);
          CHECK(tensorspace::apply_generator(f, Generator::E(1), pb) == eng.apply(eng.psi(m - 1, lam, 1), rec.vector));
          for (int j = 2; j <= m; ++j) CHECK(tensorspace::apply_generator(f, Generator::E(j), pb).is_zero());
        }
      }
    }
  }
}

TEST_CASE("contraction on maximal vectors") {
  Engine<GenericField> eng;
  const GenericField& f = eng.field();
  for (const auto& w : combinatorics::enumerate_walks(3, 4)) {
    auto rec = eng.build_c_pi(w, 3);
    Weight lam = rec.weight.as_weight(3);
    for (int j = 1; j <= 2; ++j) {
      V ef = tensorspace::apply_word(f, {Generator::E(j), Generator::F(j)}, rec.vector);
      CHECK(ef == f.qint(lam.coroot(j)) * rec.vector);
    }
  }
}

TEST_CASE("phi recursion with b formal") {
  Engine<GenericField> eng;
  std::mt19937 rng(43);
  for (int m = 2; m <= 4; ++m) {
    for (const auto& lam : strictly_dominant(rng, 4, 4)) {
      auto full = eng.phi_formal(m, lam);
      Weight dropped(std::vector<int>(lam.components().begin() + 1, lam.components().end()));
      auto lower = eng.phi_formal(m - 1, dropped);
      REQUIRE(full.size() == lower.size() + 1);
      for (std::size_t k = 0; k < lower.size(); ++k) {
        CHECK(full[k].first == lower[k].first + 1);
        CHECK(full[k].second == lower[k].second.shifted(1));
      }
      RatFunc sign = (m % 2 == 0 ? RatFunc(-1) : RatFunc(1)) * qp(1 - m);
      CHECK(full.back().first == 1);
      CHECK(full.back().second == sign * eng.psi(m - 1, lam));
    }
  }
}

TEST_CASE("young's rule: Phi_j(b) over addable rows") {
  Engine<GenericField> eng;
  for (int r = 0; r <= 4; ++r) {
    for (const auto& w : combinatorics::enumerate_walks(4, r)) {
      auto rec = eng.build_c_pi(w, 4);
      auto rows = combinatorics::addable_rows(rec.weight, 4);
      std::set<Weight> weights;
      for (int j : rows) {
        V v = eng.extend(rec, j);
        CHECK(eng.is_maximal(v));
        weights.insert(tensorspace::weight_of(v));
      }
      CHECK(weights.size() == rows.size());
    }
  }
}

TEST_CASE("xi map") {
  Engine<GenericField> eng;
  auto x2 = eng.xi_map(2, Partition({2, 1}));
  REQUIRE(x2.size() == 1);
  CHECK(x2[0].first == 1);
  CHECK(x2[0].second == word({1}));
  auto x3 = eng.xi_map(3, Partition({2, 1}));
  REQUIRE(x3.size() == 2);
  CHECK(x3[0].second == eng.psi(2, Partition({2, 1})));
  CHECK(x3[1].second == eng.psi(1, Partition({2, 1}), 1));
  CHECK(x3[0].second.root_content() == std::vector<int>{1, 1});
  CHECK(x3[1].second.root_content() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(eng.xi_map(3, Partition({2, 1, 1})), NotAddable);
  CHECK_THROWS_AS(eng.xi_map(1, Partition({2, 2})), NotAddable);
}

TEST_CASE("jimbo root vectors") {
  GenericField f;
  auto rv = jimbo_root_vectors(f, 4);
  CHECK(rv.negative.size() == 6);
  CHECK(rv.positive.size() == 6);
  CHECK(rv.negative.at({2, 1}) == word({1}));
  CHECK(rv.negative.at({3, 1}) == word({2, 1}) - qp(-1) * word({1, 2}));
  CHECK(rv.positive.at({1, 2}) == PosElement<RatFunc>::generator(1, 1));
  CHECK(rv.positive.at({1, 3}) ==
        PosElement<RatFunc>::monomial(Word({1, 2}), 1) - qp(1) * PosElement<RatFunc>::monomial(Word({2, 1}), 1));
  CHECK_THROWS_AS(jimbo_root_vectors(f, 1), InvalidArgument);
}

TEST_CASE("jimbo root vectors do not depend on the pivot") {
  GenericField f;
  for (int n = 3; n <= 6; ++n) {
    auto rv = jimbo_root_vectors(f, n);
    for (const auto& [ij, fixed] : rv.negative) {
      auto [i, j] = ij;
      for (int k = j + 1; k < i; ++k) {
        auto top = [k, i, j](int a, int b) { return (a == i && b == j) ? k : a - 1; };
        CHECK(jimbo_negative(f, i, j, top) == fixed);
        auto middle = [](int a, int b) { return (a + b) / 2; };
        CHECK(jimbo_negative(f, i, j, middle) == fixed);
      }
    }
    for (const auto& [ij, fixed] : rv.positive) {
      auto [i, j] = ij;
      for (int k = i + 1; k < j; ++k) {
        auto top = [k, i, j](int a, int b) { return (a == i && b == j) ? k : b - 1; };
        CHECK(jimbo_positive(f, i, j, top) == fixed);
      }
    }
  }
}

TEST_CASE("specialized engine agrees with evaluation of the generic one") {
  Engine<GenericField> gen;
  for (mpq_class q0 : {mpq_class(2), mpq_class(3, 2), mpq_class(-5)}) {
    Engine<SpecializedField> spec{SpecializedField(q0)};
    for (const auto& w : combinatorics::enumerate_walks(3, 4)) {
      auto g = gen.build_c_pi(w, 3).vector;
      auto s = spec.build_c_pi(w, 3).vector;
      TensorVector<mpq_class>::Terms t;
      for (const auto& [a, c] : g.terms()) t.emplace(a, c.specialize(q0));
      CHECK(s == TensorVector<mpq_class>(3, 4, std::move(t)));
    }
  }
}

TEST_CASE("concurrent construction on a shared engine") {
  Engine<GenericField> shared;
  auto walks = combinatorics::enumerate_walks(4, 5);
  std::vector<V> parallel(walks.size(), V(4, 5));
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = static_cast<std::size_t>(t); k < walks.size(); k += 4)
        parallel[k] = shared.build_c_pi(walks[k], 4).vector;
    });
  }
  for (auto& th : pool) th.join();
  Engine<GenericField> serial;
  for (std::size_t k = 0; k < walks.size(); ++k) CHECK(parallel[k] == serial.build_c_pi(walks[k], 4).vector);
}

}
