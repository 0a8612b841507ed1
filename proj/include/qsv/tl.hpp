#pragma once

// The group algebra QS_n, the five-term rewriting rule that presents the
// kernel of the morphism onto the Temperley-Lieb algebra at delta = 2, and
// normal forms in the 321-avoiding basis of the quotient.  Everything is
// exact: coefficients are rationals, rank checks are exact eliminations.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qsv/perm.hpp"
#include "qsv/rational.hpp"

namespace qsv {

// Finitely supported map Permutation -> nonzero rational; all keys share n.
class GroupAlgebraVector {
 public:
  explicit GroupAlgebraVector(int n) : n_(n) {}
  static GroupAlgebraVector unit(const Permutation& w);  // single term, coeff 1

  int n() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& w) const;

  // adds c*w, erasing the entry if the total cancels
  void add_term(const Permutation& w, const Rational& c);

  bool operator==(const GroupAlgebraVector&) const = default;

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

GroupAlgebraVector operator+(const GroupAlgebraVector& a,
                             const GroupAlgebraVector& b);
GroupAlgebraVector operator-(const GroupAlgebraVector& a,
                             const GroupAlgebraVector& b);
GroupAlgebraVector operator*(const Rational& c, const GroupAlgebraVector& a);
// group-algebra product: (u, a_u)(v, b_v) contributes a_u b_v to uv
GroupAlgebraVector operator*(const GroupAlgebraVector& a,
                             const GroupAlgebraVector& b);

// Word in the Temperley-Lieb generators e_1..e_{n-1}; empty word = unit.
struct TLWord {
  int n;
  std::vector<int> generators;
};

// The five-term substitution at a 321-pattern (i,j,k) of w: the signed sum
//   +(B,A,C) +(A,C,B) -(B,C,A) -(C,A,B) +(C,B,A)
// of the rearrangements of the values A > B > C at those positions.  Every
// output permutation is strictly Bruhat-below w (checked).
GroupAlgebraVector rewrite_321(const Permutation& w,
                               const std::array<int, 3>& pattern);

// Repeatedly rewrites the longest non-avoiding term (ties: lex-smallest
// word) at its canonical pattern until every term is 321-avoiding.  The
// result is the unique expansion of v's image in the 321-avoiding basis of
// the quotient.
GroupAlgebraVector normal_form(const GroupAlgebraVector& v);

// normal_form of the single-term vector w.
GroupAlgebraVector phi_expand(const Permutation& w);

// True iff the expansions of S are linearly independent of full rank C_n.
bool basis_check(const std::vector<Permutation>& S);

// On dependence, also yields a nonzero witness: coefficients c (indexed like
// S) with sum c_w phi_expand(w) = 0.
struct BasisReport {
  bool independent_full_rank;
  std::optional<std::vector<Rational>> witness;
};
BasisReport basis_check_witness(const std::vector<Permutation>& S);

// One uniformly chosen member per excedance class (classes in shape order,
// draws from a seeded 64-bit Mersenne twister), plus its basis_check.
std::pair<std::vector<Permutation>, bool> random_section_basis(int n,
                                                               uint64_t seed);
std::pair<std::vector<Permutation>, bool> random_section_basis(int n,
                                                               uint64_t seed,
                                                               int cap);

// e_i := identity - s_i in QS_n; words multiply in QS_n, then normal_form.
GroupAlgebraVector tl_element(const TLWord& word);
GroupAlgebraVector tl_multiply(const TLWord& a, const TLWord& b);

}  // namespace qsv
