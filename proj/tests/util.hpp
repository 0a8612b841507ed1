#pragma once

// Small helpers shared by the test suites.  Oracles here are deliberately
// written in the most naive way possible, independent of library internals.

#include <vector>

#include "qsv/ncp.hpp"
#include "qsv/perm.hpp"

namespace qsvtest {

inline qsv::Permutation P(std::vector<int> w) {
  return qsv::Permutation(std::move(w));
}

inline qsv::NoncrossingPartition N(int n, std::vector<qsv::Arc> arcs) {
  return qsv::NoncrossingPartition(n, std::move(arcs));
}

// Catalan numbers by the convolution recurrence.
inline long catalan(int n) {
  std::vector<long> c{1};
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

}  // namespace qsvtest
