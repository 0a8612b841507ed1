#pragma once

// Excedance classes of S_n and their bijection with noncrossing partition
// diagrams: the class C_lambda collects the permutations whose weak
// excedance values and positions are the complements of lambda+ / lambda-.
// Each class is the Bruhat interval [T_lambda, Q_lambda]; the quotient order
// on classes is the prefix-dominance order on shapes.

#include <vector>

#include "qsv/ncp.hpp"
#include "qsv/perm.hpp"

namespace qsv {

struct ExcedanceClass {
  NoncrossingPartition shape;
  std::vector<Permutation> members;  // sorted lexicographically
  Permutation min_elt;               // T_shape, 321-avoiding
  Permutation max_elt;               // Q_shape
};

// Q_lambda: each right endpoint moves to its leftward neighbour, everything
// else to the maximum of its component.  Computed twice - directly and as
// the product of decreasing cycles over components - and checked equal.
Permutation qsv_permutation(const NoncrossingPartition& lambda);

// {Q_lambda : lambda on [n]}, sorted lexicographically; C_n many.
std::vector<Permutation> enumerate_qsv(int n);
std::vector<Permutation> enumerate_qsv(int n, int cap);

// T_lambda: lambda+ placed increasingly under lambda-, complement under
// complement.  The Bruhat minimum of its class; always 321-avoiding.
Permutation min_permutation(const NoncrossingPartition& lambda);

// The shape whose class contains w: match the complements of the weak
// excedance profile.  Total on permutations.
NoncrossingPartition excedance_class_of(const Permutation& w);

// Classes under the strict-excedance profile (i < w_i), realized as the
// derived view through conjugation by w0 rather than a parallel build.
NoncrossingPartition strict_excedance_class_of(const Permutation& w);

// All classes of S_n, keyed and sorted by shape, built by exhaustive scan.
std::vector<ExcedanceClass> partition_into_classes(int n);
std::vector<ExcedanceClass> partition_into_classes(int n, int cap);

// The induced Bruhat order on classes; by the quotient theorem this is just
// the shape order.
bool class_leq(const NoncrossingPartition& lambda,
               const NoncrossingPartition& mu);

// Bruhat down-set of Q_mu, sorted lexicographically.  Checks on the way out
// that it is exactly the disjoint union of the classes below mu.
std::vector<Permutation> dominated_permutations(const NoncrossingPartition& mu);
std::vector<Permutation> dominated_permutations(const NoncrossingPartition& mu,
                                                int cap);

// c_low = #{i > k : w_i < k}, c_high = #{i <= k : w_i > k}; checked against
// the endpoint deficits of w's shape before returning.
struct TableauCount {
  int low;
  int high;
  bool operator==(const TableauCount&) const = default;
};
TableauCount tableau_count_check(const Permutation& w, int k);

}  // namespace qsv
