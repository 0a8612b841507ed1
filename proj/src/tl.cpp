#include "qsv/tl.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

#include "qsv/classes.hpp"
#include "qsv/config.hpp"

namespace qsv {

GroupAlgebraVector GroupAlgebraVector::unit(const Permutation& w) {
  GroupAlgebraVector v(w.n());
  v.terms_.emplace(w, 1);
  return v;
}

Rational GroupAlgebraVector::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraVector::add_term(const Permutation& w, const Rational& c) {
  if (w.n() != n_) {
    throw std::invalid_argument("add_term: permutation size mismatch");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraVector operator+(const GroupAlgebraVector& a,
                             const GroupAlgebraVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("vector size mismatch");
  GroupAlgebraVector out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

GroupAlgebraVector operator-(const GroupAlgebraVector& a,
                             const GroupAlgebraVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("vector size mismatch");
  GroupAlgebraVector out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, -c);
  return out;
}

GroupAlgebraVector operator*(const Rational& c, const GroupAlgebraVector& a) {
  GroupAlgebraVector out(a.n());
  if (c == 0) return out;
  for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
  return out;
}

GroupAlgebraVector operator*(const GroupAlgebraVector& a,
                             const GroupAlgebraVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("vector size mismatch");
  GroupAlgebraVector out(a.n());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      out.add_term(compose(u, v), cu * cv);
    }
  }
  return out;
}

GroupAlgebraVector rewrite_321(const Permutation& w,
                               const std::array<int, 3>& pattern) {
  const auto [i, j, k] = pattern;
  if (!(1 <= i && i < j && j < k && k <= w.n())) {
    throw std::invalid_argument("rewrite_321: positions out of order");
  }
  const int A = w(i), B = w(j), C = w(k);
  if (!(A > B && B > C)) {
    throw std::invalid_argument("rewrite_321: values not decreasing");
  }

  struct Placement {
    int vi, vj, vk;
    int sign;
  };
  const Placement placements[5] = {
      {B, A, C, +1}, {A, C, B, +1}, {B, C, A, -1}, {C, A, B, -1}, {C, B, A, +1},
  };

  GroupAlgebraVector out(w.n());
  for (const Placement& p : placements) {
    std::vector<int> word = w.word();
    word[static_cast<size_t>(i) - 1] = p.vi;
    word[static_cast<size_t>(j) - 1] = p.vj;
    word[static_cast<size_t>(k) - 1] = p.vk;
    Permutation term{std::move(word)};
    if (term == w || !bruhat_leq(term, w)) {
      throw std::logic_error("rewrite_321: term not strictly Bruhat-below");
    }
    out.add_term(term, p.sign);
  }
  return out;
}

GroupAlgebraVector normal_form(const GroupAlgebraVector& v) {
  GroupAlgebraVector cur = v;
  for (;;) {
    // longest non-avoiding term, ties broken toward the lex-smallest word
    const Permutation* target = nullptr;
    int target_len = -1;
    for (const auto& [w, c] : cur.terms()) {
      if (is_321_avoiding(w)) continue;
      int len = length(w);
      if (len > target_len) {
        target = &w;
        target_len = len;
      }
    }
    if (target == nullptr) return cur;
    Permutation w = *target;
    Rational c = cur.coefficient(w);
    cur.add_term(w, -c);
    GroupAlgebraVector rewritten = rewrite_321(w, *find_321_pattern(w));
    for (const auto& [u, cu] : rewritten.terms()) cur.add_term(u, c * cu);
  }
}

namespace {

std::map<Permutation, GroupAlgebraVector>& phi_cache() {
  static std::map<Permutation, GroupAlgebraVector> cache;
  return cache;
}

std::mutex& phi_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// Same rewriting rule as normal_form, but recursing one term at a time with a
// cache keyed by permutation; the two agree by confluence (tested, n <= 5).
GroupAlgebraVector phi_expand(const Permutation& w) {
  {
    std::lock_guard<std::mutex> lock(phi_cache_mutex());
    auto it = phi_cache().find(w);
    if (it != phi_cache().end()) return it->second;
  }
  GroupAlgebraVector out(w.n());
  auto pattern = find_321_pattern(w);
  if (!pattern) {
    out = GroupAlgebraVector::unit(w);
  } else {
    GroupAlgebraVector rewritten = rewrite_321(w, *pattern);
    for (const auto& [u, c] : rewritten.terms()) {
      GroupAlgebraVector sub = phi_expand(u);
      for (const auto& [t, ct] : sub.terms()) {
        out.add_term(t, c * ct);
      }
    }
  }
  std::lock_guard<std::mutex> lock(phi_cache_mutex());
  return phi_cache().emplace(w, std::move(out)).first->second;
}

namespace {

std::vector<Permutation> avoiding_basis(int n) {
  std::vector<Permutation> basis;
  for (const Permutation& w : symmetric_group(n)) {
    if (is_321_avoiding(w)) basis.push_back(w);
  }
  return basis;
}

}  // namespace

BasisReport basis_check_witness(const std::vector<Permutation>& S) {
  if (S.empty()) throw std::invalid_argument("basis_check: empty family");
  const int n = S.front().n();
  for (const Permutation& w : S) {
    if (w.n() != n) throw std::invalid_argument("basis_check: size mismatch");
  }

  const std::vector<Permutation> basis = avoiding_basis(n);
  const size_t dim = basis.size();

  // Row-reduce the coordinate matrix, carrying an augmented block that
  // expresses each reduced row as a combination of the original ones.
  struct Row {
    std::vector<Rational> coord;
    std::vector<Rational> comb;
    size_t pivot;
  };
  std::vector<Row> echelon;

  for (size_t r = 0; r < S.size(); ++r) {
    Row row;
    row.coord.assign(dim, Rational(0));
    row.comb.assign(S.size(), Rational(0));
    row.comb[r] = 1;
    GroupAlgebraVector expansion = phi_expand(S[r]);
    for (const auto& [w, c] : expansion.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), w);
      if (it == basis.end() || *it != w) {
        throw std::logic_error("basis_check: expansion term not avoiding");
      }
      row.coord[static_cast<size_t>(it - basis.begin())] = c;
    }
    for (const Row& e : echelon) {
      const Rational& x = row.coord[e.pivot];
      if (x == 0) continue;
      Rational f = x / e.coord[e.pivot];
      for (size_t c = 0; c < dim; ++c) row.coord[c] -= f * e.coord[c];
      for (size_t c = 0; c < S.size(); ++c) row.comb[c] -= f * e.comb[c];
    }
    size_t p = 0;
    while (p < dim && row.coord[p] == 0) ++p;
    if (p == dim) {
      // dependence: row.comb is a nonzero combination summing to zero
      return {false, std::move(row.comb)};
    }
    row.pivot = p;
    echelon.push_back(std::move(row));
  }

  return {echelon.size() == dim, std::nullopt};
}

bool basis_check(const std::vector<Permutation>& S) {
  return basis_check_witness(S).independent_full_rank;
}

std::pair<std::vector<Permutation>, bool> random_section_basis(int n,
                                                               uint64_t seed,
                                                               int cap) {
  std::vector<ExcedanceClass> classes = partition_into_classes(n, cap);
  std::mt19937_64 rng(seed);
  std::vector<Permutation> section;
  section.reserve(classes.size());
  for (const ExcedanceClass& cls : classes) {
    // plain modulo keeps the draw identical across standard libraries
    size_t idx = static_cast<size_t>(rng() % cls.members.size());
    section.push_back(cls.members[idx]);
  }
  return {section, basis_check(section)};
}

std::pair<std::vector<Permutation>, bool> random_section_basis(int n,
                                                               uint64_t seed) {
  return random_section_basis(n, seed, effective_cap(default_caps().partition));
}

GroupAlgebraVector tl_element(const TLWord& word) {
  if (word.n < 0) throw std::invalid_argument("tl_element: negative n");
  GroupAlgebraVector out = GroupAlgebraVector::unit(Permutation::identity(word.n));
  for (int g : word.generators) {
    if (g < 1 || g >= word.n) {
      throw std::invalid_argument("tl_element: generator index " +
                                  std::to_string(g) + " out of range");
    }
    std::vector<int> adj(static_cast<size_t>(word.n));
    for (int i = 0; i < word.n; ++i) adj[static_cast<size_t>(i)] = i + 1;
    std::swap(adj[static_cast<size_t>(g) - 1], adj[static_cast<size_t>(g)]);
    GroupAlgebraVector e = GroupAlgebraVector::unit(Permutation::identity(word.n));
    e.add_term(Permutation{std::move(adj)}, -1);
    out = out * e;
  }
  return out;
}

GroupAlgebraVector tl_multiply(const TLWord& a, const TLWord& b) {
  if (a.n != b.n) throw std::invalid_argument("tl_multiply: size mismatch");
  return normal_form(tl_element(a) * tl_element(b));
}

}  // namespace qsv
