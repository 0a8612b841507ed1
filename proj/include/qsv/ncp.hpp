#pragma once

// Noncrossing partition diagrams on [n].  An arc (i,j), i < j, joins two
// consecutive elements of a block; a valid diagram has no pair of arcs
// (i,k),(j,l) with i <= j < k <= l (this forbids crossings and shared
// same-side endpoints at once).  Ballot encodings, the prefix-dominance
// order, its covering moves, and the endpoint-matching construction.

#include <compare>
#include <utility>
#include <vector>

namespace qsv {

using Arc = std::pair<int, int>;

class NoncrossingPartition {
 public:
  // Empty diagram on [0].
  NoncrossingPartition() = default;

  // Validates the diagram condition; arcs are stored sorted by left endpoint
  // (unique, since no two arcs may share one).
  NoncrossingPartition(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool operator==(const NoncrossingPartition&) const = default;
  // (n, arc list), arc list lexicographic; the canonical order.
  auto operator<=>(const NoncrossingPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

// All diagrams on [n], sorted canonically.  Recursive generation by the
// position of the arc closing at n; count is the nth Catalan number.
std::vector<NoncrossingPartition> enumerate_ncp(int n);
std::vector<NoncrossingPartition> enumerate_ncp(int n, int cap);

// Left endpoints (lambda+) and right endpoints (lambda-), sorted.
struct EndpointSets {
  std::vector<int> left;
  std::vector<int> right;
  bool operator==(const EndpointSets&) const = default;
};
EndpointSets endpoint_sets(const NoncrossingPartition& lambda);

// The unique diagram with lambda+ = L and lambda- = R, built by matching
// each right half-arc to the most recently opened left half-arc.  Realizable
// iff |L| = |R| and |[k-1] ∩ L| >= |[k] ∩ R| for every k; on violation the
// error message reports the first failing k.
NoncrossingPartition match_endpoints(int n, const std::vector<int>& L,
                                     const std::vector<int>& R);

// Blocks of the diagram, each sorted, listed by minimum element.
std::vector<std::vector<int>> connected_components(
    const NoncrossingPartition& lambda);

// b in {+1,-1}^{2n}: b_{2k-1} = +1 iff k does not close an arc,
// b_{2k} = +1 iff k opens one.  Every prefix sum is >= 0, total 0.
using BallotSequence = std::vector<int>;
BallotSequence ballot_sequence(const NoncrossingPartition& lambda);

// lambda <= mu iff prefix sums of b^lambda are dominated by those of b^mu.
bool ncp_leq(const NoncrossingPartition& lambda,
             const NoncrossingPartition& mu);

// All diagrams covered by mu: remove an arc (i,i+1), or split an arc (i,k)
// into (i,j),(j,k) when the result is again a valid diagram.
std::vector<NoncrossingPartition> ncp_covers(const NoncrossingPartition& mu);

// d_open  = |lambda+ ∩ [k-1]| - |lambda- ∩ [k]|
// d_closed = |lambda+ ∩ [k]|  - |lambda- ∩ [k]|
// The ballot prefix sums are 1 + 2*d_open (through 2k-1) and 2*d_closed
// (through 2k).
struct EndpointDeficit {
  int open;
  int closed;
  bool operator==(const EndpointDeficit&) const = default;
};
EndpointDeficit endpoint_deficit(const NoncrossingPartition& lambda, int k);

}  // namespace qsv
