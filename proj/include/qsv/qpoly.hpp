#pragma once

// Compositions with the refinement order, sparse exact-rational polynomials
// in a fixed number of variables under graded-lex term order, the monomial
// quasisymmetric polynomials M_alpha, the vanishing polynomials P_alpha, and
// their evaluation at permutation points.

#include <map>
#include <utility>
#include <vector>

#include "qsv/perm.hpp"
#include "qsv/rational.hpp"

namespace qsv {

// Non-empty sequence of positive parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // sum of parts
  int part(int i) const { return parts_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// All coarsenings beta of alpha, each with its split-index sequence
// 1 = f_1 < ... < f_{l+1} = length(alpha)+1 so that beta_i sums the parts
// alpha_{f_i} .. alpha_{f_{i+1}-1}.  Exactly 2^(length-1) results.
std::vector<std::pair<Composition, std::vector<int>>> coarsenings(
    const Composition& alpha);

// All compositions of size exactly d, in increasing length-then-lex order.
std::vector<Composition> compositions_of(int d);

// Graded-lexicographic comparison, x_1 > x_2 > ... > x_n; greater-first so a
// map iterates leading term first.
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class Polynomial {
 public:
  explicit Polynomial(int n) : n_(n) {}
  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, int i);  // x_i, 1 <= i <= n

  int n() const { return n_; }
  const std::map<std::vector<int>, Rational, GrlexGreater>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const std::vector<int>& exponent) const;
  int total_degree() const;  // error on the zero polynomial

  void add_term(const std::vector<int>& exponent, const Rational& c);

  bool operator==(const Polynomial&) const = default;

 private:
  int n_;
  std::map<std::vector<int>, Rational, GrlexGreater> terms_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Rational& c, const Polynomial& f);

// M_alpha in n variables: sum over increasing index tuples.  Errors when
// length(alpha) > n rather than returning the zero polynomial.
Polynomial monomial_qsym(const Composition& alpha, int n);

// P_alpha in n variables: over all coarsenings (beta, f) and increasing
// tuples i_1 < ... < i_l, the product of (x_{i_j}^{a_{f_j}} - i_j^{a_{f_j}})
// times -(i_j^{a_s}) for each absorbed part s = f_j+1 .. f_{j+1}-1.
Polynomial vanishing_poly(const Composition& alpha, int n);

// Sum of the terms of maximal total degree; error on the zero polynomial.
Polynomial top_component(const Polynomial& f);

// Exact substitution x_i = point[i-1]; point must have at least n entries.
Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

// f(sigma_1, ..., sigma_n); sigma must have at least as many letters as f
// has variables.
Rational evaluate_at_permutation(const Polynomial& f, const Permutation& sigma);

// Direct summation of the double sum over weakly increasing position tuples
// and epsilon vectors that expands P_alpha at a permutation with at most one
// nontrivial cycle (necessarily a decreasing cycle).  Checked against
// evaluate_at_permutation(vanishing_poly(alpha, n), sigma) and against 0.
Rational single_cycle_expansion(const Composition& alpha,
                                const Permutation& sigma);

}  // namespace qsv
