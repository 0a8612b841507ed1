#pragma once

// Renderings and parsers for every object the command-line tool speaks:
// comma-form permutations (with a cycle display), noncrossing partitions
// (text and JSON), ballot strings, excedance classes, group-algebra sums,
// polynomials, Groebner bases, and DOT drawings of Hasse diagrams.  JSON is
// the canonical machine format; text forms are derived, never parsed back
// except where noted.  All output is UTF-8 with LF line endings and is
// byte-deterministic for a fixed input.

#include <string>
#include <utility>
#include <vector>

#include "qsv/classes.hpp"
#include "qsv/groebner.hpp"
#include "qsv/ncp.hpp"
#include "qsv/perm.hpp"
#include "qsv/qpoly.hpp"
#include "qsv/tl.hpp"

namespace qsv {

// "3,5,1,4,2"; comma-separated to survive n >= 10.
std::string perm_to_string(const Permutation& w);

// Inverse of perm_to_string; validates the word.
Permutation perm_from_string(const std::string& s);

// "(1)(7 2)(6 5 3)(4)": cycles ordered by minimum element, each written
// from its largest element following the permutation.
std::string cycle_string(const Permutation& w);

// "n=7; arcs=2-7,3-5,5-6" (arcs empty for the trivial diagram).
std::string ncp_to_text(const NoncrossingPartition& lambda);

// {"n":7,"arcs":[[2,7],[3,5],[5,6]]}
std::string ncp_to_json(const NoncrossingPartition& lambda);

// "11-1--": +1 as '1', -1 as '-', matching the diagram figures.
std::string ballot_string(const BallotSequence& b);

// {"shape":{...},"size":2,"min":"2,3,1","max":"3,2,1"[,"members":[...]]}
std::string class_to_json(const ExcedanceClass& cls, bool include_members);

// Signed sum of comma-form permutations: "(1,3,2) - 2*(2,1,3)"; terms in
// the vector's canonical (lexicographic) order; "0" for the zero vector.
std::string group_algebra_to_text(const GroupAlgebraVector& v);

// Terms sorted leading-first (graded lex), rationals as "p/q":
// "x1^2*x2 - 3/2*x3 + 1"; "0" for the zero polynomial.
std::string polynomial_to_text(const Polynomial& f);

// {"n":4,"terms":[{"exp":[1,2,1,0],"coef":"1"},...]}, leading term first.
std::string polynomial_to_json(const Polynomial& f);

// {"order":"grlex","precedence":"x1>x2>...>xn","n":...,
//  "generators":[<polynomial>...]}; uses basis.groebner when present,
// otherwise basis.generators.
std::string groebner_to_json(const IdealBasis& basis);

// Parses {"n":N,"generators":[{"terms":[{"exp":[...],"coef":"p/q"},...]},
// ...]} (each generator may also carry its own matching "n").  Rejects
// malformed documents with a message naming the offending field.
std::vector<Polynomial> polynomials_from_json(const std::string& text);

// A finite poset ready for drawing: parallel arrays of node labels and
// ranks, plus cover edges (lower index first infeasible in general, so
// edges are explicit pairs low -> high into the label array).
struct HasseGraph {
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> edges;
};

// Cover pairs (transitive reduction) of the relation leq over 0..m-1:
// (a,b) with a != b, leq[a][b], and no c strictly between.
std::vector<std::pair<int, int>> covers_from_leq(
    const std::vector<std::vector<bool>>& leq);

// Deterministic DOT rendering: rankdir=BT, one node statement per label in
// index order, edges sorted, one rank=same group per rank value.
std::string hasse_dot(const HasseGraph& graph);

}  // namespace qsv
