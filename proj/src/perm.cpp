#include "qsv/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsv/config.hpp"

namespace qsv {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size(), 0);
  for (int v : word_) {
    if (v < 1 || v > n() || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("not a permutation word");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(static_cast<size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) w[static_cast<size_t>(i) - 1] = u(v(i));
  return Permutation(std::move(w));
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

std::vector<std::vector<int>> tableau_rows(const Permutation& w) {
  std::vector<std::vector<int>> rows;
  std::vector<int> prefix;
  for (int k = 1; k <= w.n(); ++k) {
    // keep the prefix sorted as we extend it
    prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), w(k)), w(k));
    rows.push_back(prefix);
  }
  std::reverse(rows.begin(), rows.end());  // T_n first
  return rows;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  std::vector<int> pv, pw;
  for (int k = 1; k <= v.n(); ++k) {
    pv.insert(std::lower_bound(pv.begin(), pv.end(), v(k)), v(k));
    pw.insert(std::lower_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (size_t r = 0; r < pv.size(); ++r)
      if (pv[r] > pw[r]) return false;
  }
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return all;
}

BruhatOrderTable::BruhatOrderTable(int n, int cap) : n_(n) {
  if (n > effective_cap(cap))
    throw std::invalid_argument("bruhat_covering_closure: n exceeds cap " +
                                std::to_string(effective_cap(cap)));
  elements_ = symmetric_group(n);
  const size_t count = elements_.size();
  words_ = (count + 63) / 64;
  reach_.assign(count * words_, 0);

  std::vector<int> len(count);
  std::vector<size_t> order(count);
  for (size_t i = 0; i < count; ++i) {
    len[i] = length(elements_[i]);
    order[i] = i;
  }
  // longest first, so every edge target is already closed when we use it
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return len[a] > len[b]; });

  for (size_t vi : order) {
    uint64_t* row = &reach_[vi * words_];
    row[vi / 64] |= uint64_t{1} << (vi % 64);
    const Permutation& v = elements_[vi];
    // all left multiplications by a transposition: swap values a < b
    for (int a = 1; a <= n_; ++a) {
      for (int b = a + 1; b <= n_; ++b) {
        std::vector<int> w = v.word();
        for (int& x : w) {
          if (x == a) x = b;
          else if (x == b) x = a;
        }
        Permutation t_v{std::move(w)};
        int wi = index(t_v);
        if (len[wi] > len[vi]) {
          const uint64_t* up = &reach_[static_cast<size_t>(wi) * words_];
          for (size_t k = 0; k < words_; ++k) row[k] |= up[k];
        }
      }
    }
  }
}

int BruhatOrderTable::index(const Permutation& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w)
    throw std::invalid_argument("BruhatOrderTable: element of wrong S_n");
  return static_cast<int>(it - elements_.begin());
}

bool BruhatOrderTable::bit(int row, int col) const {
  return (reach_[static_cast<size_t>(row) * words_ + static_cast<size_t>(col) / 64] >>
          (static_cast<size_t>(col) % 64)) & 1;
}

bool BruhatOrderTable::leq(const Permutation& v, const Permutation& w) const {
  return bit(index(v), index(w));
}

std::vector<int> BruhatOrderTable::upset(const Permutation& v) const {
  std::vector<int> out;
  int vi = index(v);
  for (size_t j = 0; j < elements_.size(); ++j)
    if (bit(vi, static_cast<int>(j))) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> BruhatOrderTable::downset(const Permutation& w) const {
  std::vector<int> out;
  int wi = index(w);
  for (size_t i = 0; i < elements_.size(); ++i)
    if (bit(static_cast<int>(i), wi)) out.push_back(static_cast<int>(i));
  return out;
}

BruhatOrderTable bruhat_covering_closure(int n) {
  return BruhatOrderTable(n, default_caps().closure);
}

BruhatOrderTable bruhat_covering_closure(int n, int cap) {
  return BruhatOrderTable(n, cap);
}

ExcedanceProfile excedance_profile(const Permutation& w) {
  ExcedanceProfile p;
  for (int i = 1; i <= w.n(); ++i) {
    if (w(i) >= i) {
      p.positions.push_back(i);
      p.values.push_back(w(i));
    }
  }
  std::sort(p.values.begin(), p.values.end());
  return p;
}

std::optional<std::array<int, 3>> find_321_pattern(const Permutation& w) {
  const int n = w.n();
  std::vector<char> exc(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) exc[static_cast<size_t>(i)] = w(i) >= i;
  for (int i = 1; i <= n; ++i) {
    if (!exc[static_cast<size_t>(i)]) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) >= w(i)) continue;
      for (int k = j + 1; k <= n; ++k)
        if (w(k) < w(j) && !exc[static_cast<size_t>(k)])
          return std::array<int, 3>{i, j, k};
    }
  }
  // No qualifying triple: the underlying lemma says there is then no
  // 321 pattern at all.  A plain pattern here would falsify it; fail loud.
  if (!is_321_avoiding(w))
    throw std::logic_error("321 pattern with no excedance-qualifying triple");
  return std::nullopt;
}

bool is_321_avoiding(const Permutation& w) {
  const int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) >= w(i)) continue;
      for (int k = j + 1; k <= n; ++k)
        if (w(k) < w(j)) return false;
    }
  return true;
}

Permutation conjugate_by_w0(const Permutation& w) {
  const int n = w.n();
  std::vector<int> r(static_cast<size_t>(n));
  // (w0 w w0)(i) = n+1 - w(n+1-i)
  for (int i = 1; i <= n; ++i)
    r[static_cast<size_t>(i) - 1] = n + 1 - w(n + 1 - i);
  return Permutation(std::move(r));
}

}  // namespace qsv
