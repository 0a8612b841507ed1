#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "qsv/classes.hpp"
#include "qsv/qpoly.hpp"
#include "util.hpp"

using namespace qsv;
using qsvtest::P;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

// x_i as a one-term polynomial
Polynomial X(int n, int i) { return Polynomial::variable(n, i); }

Polynomial con(int n, long c) { return Polynomial::constant(n, Rational(c)); }

// (x_i^e - i^e) in n variables
Polynomial binom(int n, int i, int e) {
  Polynomial f(n);
  std::vector<int> exp(static_cast<size_t>(n), 0);
  exp[static_cast<size_t>(i) - 1] = e;
  f.add_term(exp, Rational(1));
  long c = 1;
  for (int t = 0; t < e; ++t) c *= i;
  f.add_term(std::vector<int>(static_cast<size_t>(n), 0), Rational(-c));
  return f;
}

std::vector<Composition> compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int d = 1; d <= max_size; ++d) {
    for (const Composition& alpha : compositions_of(d)) out.push_back(alpha);
  }
  return out;
}

// decreasing cycle on the sorted element set, identity elsewhere
Permutation decreasing_cycle(int n, const std::vector<int>& elems) {
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) word[static_cast<size_t>(i) - 1] = i;
  for (size_t t = 0; t < elems.size(); ++t) {
    word[static_cast<size_t>(elems[t]) - 1] =
        elems[(t + elems.size() - 1) % elems.size()];
  }
  return Permutation(word);
}

}  // namespace

TEST_CASE("composition basics") {
  Composition a = C({1, 2, 1});
  CHECK(a.length() == 3);
  CHECK(a.size() == 4);
  CHECK(a.part(2) == 2);
  CHECK_THROWS_AS(C({}), std::invalid_argument);
  CHECK_THROWS_AS(C({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(C({-1}), std::invalid_argument);
}

TEST_CASE("coarsenings") {
  SUBCASE("worked example") {
    auto list = coarsenings(C({1, 2, 1}));
    REQUIRE(list.size() == 4);
    std::set<std::vector<int>> betas;
    for (const auto& [beta, f] : list) betas.insert(beta.parts());
    std::set<std::vector<int>> expected{{1, 2, 1}, {1, 3}, {3, 1}, {4}};
    CHECK(betas == expected);

    // the split sequence for (1,3) absorbs the last part into the second
    for (const auto& [beta, f] : list) {
      if (beta.parts() == std::vector<int>{1, 3}) {
        CHECK(f == std::vector<int>{1, 2, 4});
      }
      if (beta.parts() == std::vector<int>{4}) {
        CHECK(f == std::vector<int>{1, 4});
      }
    }
  }

  SUBCASE("single part is its own only coarsening") {
    auto list = coarsenings(C({5}));
    REQUIRE(list.size() == 1);
    CHECK(list[0].first.parts() == std::vector<int>{5});
    CHECK(list[0].second == std::vector<int>{1, 2});
  }

  SUBCASE("all-ones composition") {
    CHECK(coarsenings(C({1, 1, 1})).size() == 4);
  }

  SUBCASE("count, size preservation, split consistency") {
    for (const Composition& alpha : compositions_up_to(6)) {
      auto list = coarsenings(alpha);
      CHECK(list.size() == (1u << (alpha.length() - 1)));
      std::set<std::vector<int>> seen;
      for (const auto& [beta, f] : list) {
        CHECK(beta.size() == alpha.size());
        REQUIRE(static_cast<int>(f.size()) == beta.length() + 1);
        CHECK(f.front() == 1);
        CHECK(f.back() == alpha.length() + 1);
        for (int i = 1; i <= beta.length(); ++i) {
          int sum = 0;
          for (int s = f[static_cast<size_t>(i) - 1];
               s < f[static_cast<size_t>(i)]; ++s) {
            sum += alpha.part(s);
          }
          CHECK(beta.part(i) == sum);
        }
        seen.insert(f);
      }
      CHECK(seen.size() == list.size());
    }
  }
}

TEST_CASE("compositions_of enumerates completely") {
  for (int d = 1; d <= 8; ++d) {
    auto list = compositions_of(d);
    CHECK(list.size() == (1u << (d - 1)));
    std::set<std::vector<int>> seen;
    for (const Composition& alpha : list) {
      CHECK(alpha.size() == d);
      seen.insert(alpha.parts());
    }
    CHECK(seen.size() == list.size());
  }
  CHECK_THROWS_AS(compositions_of(0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and term order") {
  SUBCASE("graded-lex iteration order") {
    Polynomial m = monomial_qsym(C({2, 1}), 3);
    std::vector<std::vector<int>> order;
    for (const auto& [e, c] : m.terms()) order.push_back(e);
    std::vector<std::vector<int>> expected{{2, 1, 0}, {2, 0, 1}, {0, 2, 1}};
    CHECK(order == expected);

    // degree dominates, then lex with x1 highest
    Polynomial f = X(2, 1) + con(2, 3) * X(2, 2) * X(2, 2) * X(2, 2);
    CHECK(f.terms().begin()->first == std::vector<int>{0, 3});
  }

  SUBCASE("cancellation and zero handling") {
    Polynomial f = X(2, 1) - X(2, 1);
    CHECK(f.is_zero());
    CHECK((Rational(0) * X(2, 1)).is_zero());
    CHECK_THROWS_AS(f.total_degree(), std::invalid_argument);
  }

  SUBCASE("ring axioms on random triples") {
    std::mt19937_64 rng(6021023);
    auto random_poly = [&]() {
      Polynomial f(3);
      for (int t = 0; t < 4; ++t) {
        std::vector<int> e{static_cast<int>(rng() % 3),
                           static_cast<int>(rng() % 3),
                           static_cast<int>(rng() % 2)};
        f.add_term(e, Rational(static_cast<long>(rng() % 9) - 4));
      }
      return f;
    };
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial f = random_poly(), g = random_poly(), h = random_poly();
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);

      std::vector<Rational> point{Rational(2), make_rational(-1, 3), Rational(5)};
      CHECK(evaluate(f + g, point) == evaluate(f, point) + evaluate(g, point));
      CHECK(evaluate(f * g, point) == evaluate(f, point) * evaluate(g, point));
    }
  }

  SUBCASE("width mismatches throw") {
    CHECK_THROWS_AS(X(2, 1) + X(3, 1), std::invalid_argument);
    Polynomial f(2);
    CHECK_THROWS_AS(f.add_term({1, 0, 0}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(f.add_term({-1, 0}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::variable(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(X(3, 1), {Rational(1)}), std::invalid_argument);
  }
}

TEST_CASE("monomial quasisymmetric polynomials") {
  SUBCASE("worked examples") {
    CHECK(monomial_qsym(C({1}), 2) == X(2, 1) + X(2, 2));
    Polynomial m = monomial_qsym(C({2, 1}), 3);
    Polynomial expected =
        X(3, 1) * X(3, 1) * X(3, 2) + X(3, 1) * X(3, 1) * X(3, 3) +
        X(3, 2) * X(3, 2) * X(3, 3);
    CHECK(m == expected);
    CHECK(monomial_qsym(C({1, 2, 1}), 4).terms().size() == 4);
  }

  SUBCASE("length above variable count is an error") {
    CHECK_THROWS_AS(monomial_qsym(C({1, 1, 1}), 2), std::invalid_argument);
  }

  SUBCASE("homogeneity and term count") {
    for (int n = 1; n <= 5; ++n) {
      for (const Composition& alpha : compositions_up_to(5)) {
        if (alpha.length() > n) continue;
        Polynomial m = monomial_qsym(alpha, n);
        CHECK(m == top_component(m));
        CHECK(m.total_degree() == alpha.size());
        // C(n, length) terms
        long count = 1;
        for (int t = 0; t < alpha.length(); ++t) {
          count = count * (n - t) / (t + 1);
        }
        CHECK(static_cast<long>(m.terms().size()) == count);
      }
    }
  }

  SUBCASE("quasisymmetry: equal coefficients on every index tuple") {
    for (int n = 1; n <= 5; ++n) {
      for (const Composition& alpha : compositions_up_to(5)) {
        if (alpha.length() > n) continue;
        Polynomial m = monomial_qsym(alpha, n);
        for (const auto& [e, c] : m.terms()) {
          CHECK(c == 1);
          // the nonzero exponents, read left to right, spell out alpha
          std::vector<int> pattern;
          for (int x : e) {
            if (x > 0) pattern.push_back(x);
          }
          CHECK(pattern == alpha.parts());
        }
      }
    }
  }
}

TEST_CASE("vanishing polynomial construction") {
  SUBCASE("one variable") {
    CHECK(vanishing_poly(C({1}), 1) == X(1, 1) - con(1, 1));
  }

  SUBCASE("the four-variable expansion, transcribed product by product") {
    const int n = 4;
    Polynomial expected(n);
    auto acc = [&](const Polynomial& p) { expected = expected + p; };

    // finest coarsening (1,2,1): all increasing triples
    acc(binom(n, 1, 1) * binom(n, 2, 2) * binom(n, 3, 1));
    acc(binom(n, 1, 1) * binom(n, 2, 2) * binom(n, 4, 1));
    acc(binom(n, 1, 1) * binom(n, 3, 2) * binom(n, 4, 1));
    acc(binom(n, 2, 1) * binom(n, 3, 2) * binom(n, 4, 1));

    // (1,3): the trailing part is absorbed into the second factor
    acc(con(n, -2) * binom(n, 1, 1) * binom(n, 2, 2));
    acc(con(n, -3) * binom(n, 1, 1) * binom(n, 3, 2));
    acc(con(n, -4) * binom(n, 1, 1) * binom(n, 4, 2));
    acc(con(n, -3) * binom(n, 2, 1) * binom(n, 3, 2));
    acc(con(n, -4) * binom(n, 2, 1) * binom(n, 4, 2));
    acc(con(n, -4) * binom(n, 3, 1) * binom(n, 4, 2));

    // (3,1): the middle part is absorbed into the first factor
    acc(con(n, -1) * binom(n, 1, 1) * binom(n, 2, 1));
    acc(con(n, -1) * binom(n, 1, 1) * binom(n, 3, 1));
    acc(con(n, -1) * binom(n, 1, 1) * binom(n, 4, 1));
    acc(con(n, -4) * binom(n, 2, 1) * binom(n, 3, 1));
    acc(con(n, -4) * binom(n, 2, 1) * binom(n, 4, 1));
    acc(con(n, -9) * binom(n, 3, 1) * binom(n, 4, 1));

    // (4): both trailing parts absorbed; the two signs cancel
    acc(con(n, 1) * binom(n, 1, 1));
    acc(con(n, 8) * binom(n, 2, 1));
    acc(con(n, 27) * binom(n, 3, 1));
    acc(con(n, 64) * binom(n, 4, 1));

    CHECK(vanishing_poly(C({1, 2, 1}), n) == expected);
  }

  SUBCASE("length above variable count is an error") {
    CHECK_THROWS_AS(vanishing_poly(C({1, 1}), 1), std::invalid_argument);
  }

  SUBCASE("top component is the monomial quasisymmetric polynomial") {
    for (int n = 1; n <= 5; ++n) {
      for (const Composition& alpha : compositions_up_to(6)) {
        if (alpha.length() > n) continue;
        CHECK(top_component(vanishing_poly(alpha, n)) ==
              monomial_qsym(alpha, n));
      }
    }
  }
}

TEST_CASE("top component") {
  Polynomial f = X(2, 1) * X(2, 1) + X(2, 2);
  CHECK(top_component(f) == X(2, 1) * X(2, 1));
  CHECK(top_component(con(2, 5)) == con(2, 5));
  Polynomial zero(2);
  CHECK_THROWS_AS(top_component(zero), std::invalid_argument);
}

TEST_CASE("evaluation at permutations") {
  SUBCASE("single-part polynomials vanish on every permutation") {
    // sum of (x_i^d - i^d) is zero at any rearrangement of 1..n
    for (int d = 1; d <= 3; ++d) {
      for (const Permutation& w : symmetric_group(4)) {
        CHECK(evaluate_at_permutation(vanishing_poly(C({d}), 4), w) == 0);
      }
    }
    CHECK(evaluate_at_permutation(vanishing_poly(C({1}), 3), P({3, 2, 1})) ==
          0);
  }

  SUBCASE("hand-computed nonvanishing value outside the variety") {
    // at 231: the (2,1)-indexed summands give -13, the (3)-indexed give +11
    Permutation w({2, 3, 1});
    Polynomial fine = binom(3, 1, 2) * binom(3, 2, 1) +
                      binom(3, 1, 2) * binom(3, 3, 1) +
                      binom(3, 2, 2) * binom(3, 3, 1);
    Polynomial coarse = con(3, -1) * binom(3, 1, 2) +
                        con(3, -2) * binom(3, 2, 2) +
                        con(3, -3) * binom(3, 3, 2);
    CHECK(evaluate_at_permutation(fine, w) == -13);
    CHECK(evaluate_at_permutation(coarse, w) == 11);
    CHECK(vanishing_poly(C({2, 1}), 3) == fine + coarse);
    CHECK(evaluate_at_permutation(vanishing_poly(C({2, 1}), 3), w) == -2);
  }

  SUBCASE("vanishing on the variety") {
    for (int n = 1; n <= 6; ++n) {
      auto points = enumerate_qsv(n);
      for (const Composition& alpha : compositions_up_to(6)) {
        if (alpha.length() > n) continue;
        Polynomial p = vanishing_poly(alpha, n);
        for (const Permutation& sigma : points) {
          CHECK(evaluate_at_permutation(p, sigma) == 0);
        }
      }
    }
  }

  SUBCASE("every point off the variety is separated") {
    for (int n = 2; n <= 4; ++n) {
      auto qsv = enumerate_qsv(n);
      for (const Permutation& w : symmetric_group(n)) {
        if (std::binary_search(qsv.begin(), qsv.end(), w)) continue;
        bool separated = false;
        for (const Composition& alpha : compositions_up_to(6)) {
          if (alpha.length() > n) continue;
          if (evaluate_at_permutation(vanishing_poly(alpha, n), w) != 0) {
            separated = true;
            break;
          }
        }
        CHECK(separated);
      }
    }
  }

  SUBCASE("short permutations are rejected") {
    CHECK_THROWS_AS(
        evaluate_at_permutation(X(3, 1), P({2, 1})), std::invalid_argument);
  }
}

TEST_CASE("single-cycle expansion") {
  SUBCASE("identity and worked examples") {
    CHECK(single_cycle_expansion(C({1}), Permutation::identity(3)) == 0);
    CHECK(single_cycle_expansion(C({2, 1, 1}), Permutation::identity(5)) == 0);
    CHECK(single_cycle_expansion(C({1, 1}), P({3, 1, 2})) == 0);
    CHECK(single_cycle_expansion(C({2, 1}), P({7, 1, 2, 3, 4, 5, 6})) == 0);
  }

  SUBCASE("compositions longer than the permutation") {
    CHECK(single_cycle_expansion(C({1, 1, 1}), P({2, 1})) == 0);
    CHECK(single_cycle_expansion(C({1, 2, 1, 1}), Permutation::identity(2)) ==
          0);
  }

  SUBCASE("rejects anything but a single decreasing cycle") {
    CHECK_THROWS_AS(single_cycle_expansion(C({1}), P({2, 1, 4, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(single_cycle_expansion(C({1}), P({2, 3, 1})),
                    std::invalid_argument);
  }

  SUBCASE("agreement sweep over all single-cycle points") {
    for (int n = 2; n <= 6; ++n) {
      // every subset of size >= 2 names one decreasing cycle in the variety
      std::vector<std::vector<int>> subsets;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) elems.push_back(i + 1);
        }
        if (elems.size() >= 2) subsets.push_back(elems);
      }
      for (const auto& elems : subsets) {
        Permutation sigma = decreasing_cycle(n, elems);
        for (const Composition& alpha : compositions_up_to(5)) {
          // the operation itself cross-checks against vanishing_poly
          CHECK(single_cycle_expansion(alpha, sigma) == 0);
        }
      }
    }
  }
}
