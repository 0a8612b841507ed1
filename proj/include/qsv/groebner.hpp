#pragma once

// Graded-lex Groebner machinery over exact rationals: Buchberger's algorithm,
// standard monomials of zero-dimensional ideals, vanishing ideals of finite
// rational point sets by Buchberger-Moller interpolation, and the assembled
// verification that the quasisymmetric ideal cuts out exactly the variety.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsv/qpoly.hpp"

namespace qsv {

// Graded-lexicographic term order with precedence x_1 > x_2 > ... > x_n;
// the only order the library uses.
struct TermOrder {
  // a comes strictly before b (a is grlex-greater)
  bool greater(const std::vector<int>& a, const std::vector<int>& b) const {
    return GrlexGreater{}(a, b);
  }
};

struct IdealBasis {
  std::vector<Polynomial> generators;
  std::optional<std::vector<Polynomial>> groebner;
  int n = 0;
};

using Term = std::pair<std::vector<int>, Rational>;

// The grlex-greatest term; error on the zero polynomial.
Term leading_term(const Polynomial& f, const TermOrder& ord);

// Multivariate division: f = sum quotients[i]*G[i] + remainder with no
// remainder term divisible by any lt(G[i]); the first divisor in list order
// always wins, so the result is deterministic.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G,
                      const TermOrder& ord);

// Reduced Groebner basis of the ideal generated by gens: monic, no leading
// term divides another, every tail fully reduced.  Deterministic output
// (sorted by increasing leading term).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const TermOrder& ord);

// All monomials outside the leading-term ideal, in increasing grlex order.
// Errors when some variable has no pure power among the leading terms (the
// ideal is not zero-dimensional).
std::vector<std::vector<int>> standard_monomials(
    const std::vector<Polynomial>& gb, const TermOrder& ord);

// Reduced Groebner basis of the ideal of polynomials vanishing at every
// point, by interpolation on increasing monomials; never sees P_alpha, so it
// serves as the independent oracle.  Standard-monomial count = point count.
IdealBasis point_vanishing_ideal(const std::vector<std::vector<Rational>>& points);

// Adds the generators M_alpha degree by degree until the standard-monomial
// count is finite and unchanged across two consecutive degrees; returns that
// degree and the basis.  Checked against the Catalan dimension.  A positive
// max_degree overrides the default budget of n(n-1)/2 + 2 added degrees.
std::pair<int, IdealBasis> saturate_qsym_generators(int n, const TermOrder& ord);
std::pair<int, IdealBasis> saturate_qsym_generators(int n, const TermOrder& ord,
                                                    int cap,
                                                    int max_degree = -1);

// Same saturation scheme over the vanishing polynomials P_alpha.
std::pair<int, IdealBasis> saturate_vanishing_generators(int n,
                                                         const TermOrder& ord);
std::pair<int, IdealBasis> saturate_vanishing_generators(int n,
                                                         const TermOrder& ord,
                                                         int cap,
                                                         int max_degree = -1);

// True iff the leading-term ideal is unchanged by passing to top-degree
// components of a Groebner basis (requires a zero-dimensional ideal).
bool verify_grin(const std::vector<Polynomial>& gens, const TermOrder& ord);

// The assembled certificate at size n. Throws on any failed sub-check.
struct VanishingReport {
  int n = 0;
  int vanishing_saturation_degree = 0;  // P_alpha loop
  int qsym_saturation_degree = 0;       // M_alpha loop
  long dimension = 0;                   // shared standard-monomial count
  long catalan = 0;
  bool vanishing_on_points = false;     // every P_alpha kills every point
  bool vanishing_dimension = false;     // dim R/<P_alpha> = C_n
  bool points_dimension = false;        // dim R/I(points) = C_n
  bool leading_terms_match = false;     // in<P_alpha> = in I(points)
  bool qsym_monomials_match = false;    // std monomials of <M_alpha> coincide
};
VanishingReport verify_theorem_vanishingQSV(int n);
VanishingReport verify_theorem_vanishingQSV(int n, int cap,
                                            int max_degree = -1);

}  // namespace qsv
