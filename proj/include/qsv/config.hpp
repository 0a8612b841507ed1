#pragma once

// Brute-force size caps.  Every exhaustive scan in the library refuses to run
// above its cap unless the caller raises it explicitly or the environment
// variable QSV_CAP_OVERRIDE is set (an absolute n that replaces every cap;
// meant for CI tuning only).

namespace qsv {

struct Caps {
  int closure = 6;     // bruhat_covering_closure: |S_6|^2 table is instant
  int enumerate = 10;  // enumerate_ncp: C_10 = 16796
  int partition = 7;   // partition_into_classes: scans S_n
  int hasse = 5;       // hasse exports: quotient construction scans S_n pairs
  int groebner = 4;    // saturation loops: Buchberger over Q
  int groebner_stretch = 5;  // opt-in ceiling for the saturation loops
};

// Default caps, with QSV_CAP_OVERRIDE not yet applied.
Caps default_caps();

// cap if QSV_CAP_OVERRIDE is unset, otherwise the override value.
int effective_cap(int cap);

}  // namespace qsv
