#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qsv/perm.hpp"

using namespace qsv;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

// Independent oracle: length as the number of adjacent swaps bubble sort
// needs to sort the word.
int bubble_sort_swaps(std::vector<int> w) {
  int swaps = 0;
  for (size_t pass = 0; pass + 1 < w.size(); ++pass)
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        ++swaps;
      }
  return swaps;
}

// Independent oracle: smallest qualifying 321 triple by fully materialised
// scan over all triples, kept separate from the library's early-exit loops.
std::optional<std::array<int, 3>> brute_qualifying_triple(const Permutation& w) {
  std::optional<std::array<int, 3>> best;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      for (int k = j + 1; k <= w.n(); ++k) {
        if (!(w(i) > w(j) && w(j) > w(k))) continue;
        if (w(i) < i || w(k) >= k) continue;
        std::array<int, 3> t{i, j, k};
        if (!best || t < *best) best = t;
      }
  return best;
}

bool brute_has_321(const Permutation& w) {
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      for (int k = j + 1; k <= w.n(); ++k)
        if (w(i) > w(j) && w(j) > w(k)) return true;
  return false;
}

long catalan(int n) {
  // C_0..C_10 via the convolution recurrence
  std::vector<long> c{1};
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

}  // namespace

TEST_CASE("composition is pointwise application, with identity and inverse laws") {
  std::mt19937 rng(20240811);
  for (int n : {0, 1, 2, 5, 8}) {
    std::vector<int> a(n), b(n);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    for (int rep = 0; rep < 20; ++rep) {
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      Permutation u{a}, v{b};
      Permutation uv = compose(u, v);
      for (int i = 1; i <= n; ++i) CHECK(uv(i) == u(v(i)));
      CHECK(compose(u, Permutation::identity(n)) == u);
      CHECK(compose(Permutation::identity(n), u) == u);
      CHECK(compose(u, u.inverse()) == Permutation::identity(n));
      CHECK(compose(u.inverse(), u) == Permutation::identity(n));
    }
  }
  CHECK_THROWS_AS(compose(P({1, 2}), P({1})), std::invalid_argument);
}

TEST_CASE("constructor rejects non-permutation words") {
  CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
}

TEST_CASE("length equals bubble-sort swap count and is inverse-invariant") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : symmetric_group(n)) {
      CHECK(length(w) == bubble_sort_swaps(w.word()));
      CHECK(length(w) == length(w.inverse()));
    }
  CHECK(length(P({3, 5, 1, 4, 2})) == 6);
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(P({4, 3, 2, 1})) == 6);
}

TEST_CASE("tableau rows of the worked five-letter words") {
  CHECK(tableau_rows(P({5, 2, 3, 1, 4})) ==
        std::vector<std::vector<int>>{
            {1, 2, 3, 4, 5}, {1, 2, 3, 5}, {2, 3, 5}, {2, 5}, {5}});
  CHECK(tableau_rows(P({4, 1, 2, 3, 5})) ==
        std::vector<std::vector<int>>{
            {1, 2, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 4}, {1, 4}, {4}});
  CHECK(tableau_rows(Permutation()) == std::vector<std::vector<int>>{});
}

TEST_CASE("the five-letter pair is comparable in exactly one direction") {
  // 41235 <= 52314 row by row; the reverse fails already at the top letter.
  CHECK(bruhat_leq(P({4, 1, 2, 3, 5}), P({5, 2, 3, 1, 4})));
  CHECK_FALSE(bruhat_leq(P({5, 2, 3, 1, 4}), P({4, 1, 2, 3, 5})));
}

TEST_CASE("tableau criterion agrees with the covering-closure oracle") {
  for (int n = 0; n <= 5; ++n) {
    BruhatOrderTable oracle = bruhat_covering_closure(n);
    const auto& all = oracle.elements();
    for (const auto& v : all)
      for (const auto& w : all)
        CHECK(bruhat_leq(v, w) == oracle.leq(v, w));
  }
}

TEST_CASE("bruhat_leq is a partial order refining length") {
  for (int n = 2; n <= 5; ++n) {
    auto all = symmetric_group(n);
    for (const auto& v : all) {
      CHECK(bruhat_leq(v, v));
      for (const auto& w : all) {
        if (bruhat_leq(v, w) && bruhat_leq(w, v)) CHECK(v == w);
        if (bruhat_leq(v, w) && v != w) CHECK(length(v) < length(w));
        for (const auto& u : all)
          if (bruhat_leq(u, v) && bruhat_leq(v, w)) CHECK(bruhat_leq(u, w));
      }
    }
  }
}

TEST_CASE("covering closure refuses n above the cap") {
  CHECK_THROWS_AS(bruhat_covering_closure(7), std::invalid_argument);
  // raising the cap explicitly works
  BruhatOrderTable t = bruhat_covering_closure(7, 7);
  CHECK(t.leq(Permutation::identity(7), P({7, 6, 5, 4, 3, 2, 1})));
  CHECK_FALSE(t.leq(P({7, 6, 5, 4, 3, 2, 1}), Permutation::identity(7)));
}

TEST_CASE("weak excedance profiles") {
  // 35142768, non-excedances at positions 3, 5, 7
  ExcedanceProfile p = excedance_profile(P({3, 5, 1, 4, 2, 7, 6, 8}));
  CHECK(p.positions == std::vector<int>{1, 2, 4, 6, 8});
  CHECK(p.values == std::vector<int>{3, 4, 5, 7, 8});

  ExcedanceProfile id5 = excedance_profile(Permutation::identity(5));
  CHECK(id5.positions == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(id5.values == std::vector<int>{1, 2, 3, 4, 5});

  ExcedanceProfile q = excedance_profile(P({3, 2, 1}));
  CHECK(q.positions == std::vector<int>{1, 2});
  CHECK(q.values == std::vector<int>{2, 3});

  for (int n = 0; n <= 7; ++n)
    for (const auto& w : symmetric_group(n))
      CHECK(excedance_profile(w).positions.size() ==
            excedance_profile(w).values.size());
}

TEST_CASE("321 pattern finder matches the exhaustive oracle") {
  CHECK(find_321_pattern(P({1, 2, 3})) == std::nullopt);
  CHECK(find_321_pattern(P({3, 2, 1})) == std::array<int, 3>{1, 2, 3});
  // E_pos(4321) = {1,2}, so (1,2,3) is the smallest qualifying triple.
  CHECK(find_321_pattern(P({4, 3, 2, 1})) == std::array<int, 3>{1, 2, 3});

  for (int n = 0; n <= 6; ++n) {
    long avoiders = 0;
    for (const auto& w : symmetric_group(n)) {
      auto t = find_321_pattern(w);
      CHECK(t == brute_qualifying_triple(w));
      CHECK(is_321_avoiding(w) == !brute_has_321(w));
      CHECK(t.has_value() == !is_321_avoiding(w));
      if (t) {
        auto [i, j, k] = *t;
        CHECK(w(i) > w(j));
        CHECK(w(j) > w(k));
        CHECK(w(i) >= i);   // i is a weak excedance position
        CHECK(w(k) < k);    // k is not
      } else {
        ++avoiders;
      }
    }
    CHECK(avoiders == catalan(n));
  }
  CHECK(is_321_avoiding(P({3, 4, 1, 6, 2, 7, 5, 8})));
}

TEST_CASE("conjugation by the longest element is an order automorphism") {
  CHECK(conjugate_by_w0(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(conjugate_by_w0(P({3, 2, 1})) == P({3, 2, 1}));
  CHECK(conjugate_by_w0(P({3, 1, 2})) == P({2, 3, 1}));

  for (int n = 0; n <= 5; ++n) {
    auto all = symmetric_group(n);
    Permutation w0 = conjugate_by_w0(Permutation::identity(n)).inverse();
    for (const auto& v : all) {
      // involution, and identical to composing with w0 on both sides
      CHECK(conjugate_by_w0(conjugate_by_w0(v)) == v);
      (void)w0;
      for (const auto& w : all)
        CHECK(bruhat_leq(v, w) ==
              bruhat_leq(conjugate_by_w0(v), conjugate_by_w0(w)));
    }
  }
}
