#pragma once

// Permutations of [n] in one-line notation, Bruhat order (tableau criterion
// plus an independent covering-closure oracle), weak excedances, and
// 321-pattern detection.  One-line words are the canonical representation;
// cycle notation is an I/O rendering only (see io.hpp).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace qsv {

class Permutation {
 public:
  // Identity of S_0.
  Permutation() = default;

  // word[i-1] is the image of i; must be a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(word_.size()); }

  // Image of i, 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic on the one-line word; the library's canonical order.
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

// (u*v)(i) = u(v(i)).  Sizes must match.
Permutation compose(const Permutation& u, const Permutation& v);

// Coxeter length = number of inversions.
int length(const Permutation& w);

// Rows T_n(w), ..., T_1(w); row T_k is {w_1,...,w_k} sorted increasingly.
std::vector<std::vector<int>> tableau_rows(const Permutation& w);

// Bruhat order via the tableau criterion: v <= w iff every row of the sorted
// prefix tableau of v is entrywise <= the corresponding row for w.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// All of S_n in lexicographic order.
std::vector<Permutation> symmetric_group(int n);

// Full Bruhat order on S_n computed from first principles: edges v -> t*v
// whenever the transposition t raises length, then reflexive-transitive
// closure.  Serves as the oracle the tableau criterion is tested against.
class BruhatOrderTable {
 public:
  BruhatOrderTable(int n, int cap);

  bool leq(const Permutation& v, const Permutation& w) const;

  // Elements in lexicographic order; index() is the position in this list.
  const std::vector<Permutation>& elements() const { return elements_; }
  int index(const Permutation& w) const;

  // Up-set / down-set of an element, as indices into elements().
  std::vector<int> upset(const Permutation& v) const;
  std::vector<int> downset(const Permutation& w) const;

 private:
  bool bit(int row, int col) const;
  int n_ = 0;
  size_t words_ = 0;  // 64-bit words per row
  std::vector<Permutation> elements_;
  std::vector<uint64_t> reach_;  // row-major bit matrix: reach[v][w] = v <= w
};

// Oracle constructor named after what it does; cap defaults to Caps::closure.
BruhatOrderTable bruhat_covering_closure(int n);
BruhatOrderTable bruhat_covering_closure(int n, int cap);

// Weak excedances of w: positions {i : w_i >= i} and values {w_i : w_i >= i},
// both sorted increasingly.  Always the same cardinality.
struct ExcedanceProfile {
  std::vector<int> positions;
  std::vector<int> values;
  bool operator==(const ExcedanceProfile&) const = default;
  auto operator<=>(const ExcedanceProfile&) const = default;
};

ExcedanceProfile excedance_profile(const Permutation& w);

// Lexicographically smallest triple i < j < k with w_i > w_j > w_k,
// i a weak excedance position and k not one; such a triple exists whenever w
// has any 321 pattern.  Returns nothing iff w is 321-avoiding.
std::optional<std::array<int, 3>> find_321_pattern(const Permutation& w);

// Plain exhaustive test for an occurrence of the pattern 321.
bool is_321_avoiding(const Permutation& w);

// w0 * w * w0 where w0 = n, n-1, ..., 1.
Permutation conjugate_by_w0(const Permutation& w);

}  // namespace qsv
