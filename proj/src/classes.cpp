#include "qsv/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsv/config.hpp"

namespace qsv {

Permutation qsv_permutation(const NoncrossingPartition& lambda) {
  const int n = lambda.n();
  auto comps = connected_components(lambda);

  // direct definition: right endpoints step left, the rest jump to the
  // component maximum
  std::vector<int> word(static_cast<size_t>(n));
  std::vector<int> compmax(static_cast<size_t>(n) + 1);
  for (const auto& c : comps)
    for (int x : c) compmax[static_cast<size_t>(x)] = c.back();
  for (int j = 1; j <= n; ++j)
    word[static_cast<size_t>(j) - 1] = compmax[static_cast<size_t>(j)];
  for (const Arc& a : lambda.arcs())
    word[static_cast<size_t>(a.second) - 1] = a.first;
  Permutation direct{std::move(word)};

  // Lemma construction: product of the decreasing cycles (c_m ... c_2 c_1)
  Permutation cycles = Permutation::identity(n);
  for (const auto& c : comps) {
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) cyc[static_cast<size_t>(i) - 1] = i;
    const size_t m = c.size();
    for (size_t i = 0; i < m; ++i)
      cyc[static_cast<size_t>(c[(i + 1) % m]) - 1] = c[i];
    cycles = compose(cycles, Permutation{std::move(cyc)});
  }
  if (direct != cycles)
    throw std::logic_error("qsv_permutation: constructions disagree");
  return direct;
}

std::vector<Permutation> enumerate_qsv(int n) {
  return enumerate_qsv(n, default_caps().enumerate);
}

std::vector<Permutation> enumerate_qsv(int n, int cap) {
  std::vector<Permutation> out;
  for (const auto& lambda : enumerate_ncp(n, cap))
    out.push_back(qsv_permutation(lambda));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("enumerate_qsv: Q values collide");
  return out;
}

Permutation min_permutation(const NoncrossingPartition& lambda) {
  const int n = lambda.n();
  EndpointSets s = endpoint_sets(lambda);
  std::vector<char> inL(static_cast<size_t>(n) + 1, 0),
      inR(static_cast<size_t>(n) + 1, 0);
  for (int x : s.left) inL[static_cast<size_t>(x)] = 1;
  for (int x : s.right) inR[static_cast<size_t>(x)] = 1;
  std::vector<int> coleft, coright;
  for (int x = 1; x <= n; ++x) {
    if (!inL[static_cast<size_t>(x)]) coleft.push_back(x);
    if (!inR[static_cast<size_t>(x)]) coright.push_back(x);
  }
  std::vector<int> word(static_cast<size_t>(n));
  for (size_t r = 0; r < s.right.size(); ++r)
    word[static_cast<size_t>(s.right[r]) - 1] = s.left[r];
  for (size_t r = 0; r < coright.size(); ++r)
    word[static_cast<size_t>(coright[r]) - 1] = coleft[r];
  Permutation t{std::move(word)};
  if (!is_321_avoiding(t))
    throw std::logic_error("min_permutation: T is not 321-avoiding");
  return t;
}

NoncrossingPartition excedance_class_of(const Permutation& w) {
  const int n = w.n();
  ExcedanceProfile p = excedance_profile(w);
  std::vector<char> inval(static_cast<size_t>(n) + 1, 0),
      inpos(static_cast<size_t>(n) + 1, 0);
  for (int v : p.values) inval[static_cast<size_t>(v)] = 1;
  for (int i : p.positions) inpos[static_cast<size_t>(i)] = 1;
  std::vector<int> L, R;
  for (int x = 1; x <= n; ++x) {
    if (!inval[static_cast<size_t>(x)]) L.push_back(x);
    if (!inpos[static_cast<size_t>(x)]) R.push_back(x);
  }
  return match_endpoints(n, L, R);
}

NoncrossingPartition strict_excedance_class_of(const Permutation& w) {
  return excedance_class_of(conjugate_by_w0(w));
}

std::vector<ExcedanceClass> partition_into_classes(int n) {
  return partition_into_classes(n, default_caps().partition);
}

std::vector<ExcedanceClass> partition_into_classes(int n, int cap) {
  if (n > effective_cap(cap))
    throw std::invalid_argument("partition_into_classes: n exceeds cap " +
                                std::to_string(effective_cap(cap)));
  // bucket S_n by weak excedance profile; lex scan keeps members sorted
  std::map<std::pair<std::vector<int>, std::vector<int>>,
           std::vector<Permutation>>
      buckets;
  for (const auto& w : symmetric_group(n)) {
    ExcedanceProfile p = excedance_profile(w);
    buckets[{p.positions, p.values}].push_back(w);
  }
  std::vector<ExcedanceClass> out;
  for (auto& [profile, members] : buckets) {
    ExcedanceClass c;
    c.shape = excedance_class_of(members.front());
    c.min_elt = min_permutation(c.shape);
    c.max_elt = qsv_permutation(c.shape);
    c.members = std::move(members);
    if (!std::binary_search(c.members.begin(), c.members.end(), c.min_elt) ||
        !std::binary_search(c.members.begin(), c.members.end(), c.max_elt))
      throw std::logic_error("class extremes are not members");
    for (const auto& w : c.members)
      if (!bruhat_leq(c.min_elt, w) || !bruhat_leq(w, c.max_elt))
        throw std::logic_error("class member outside [T, Q]");
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const ExcedanceClass& a, const ExcedanceClass& b) {
              return a.shape < b.shape;
            });
  return out;
}

bool class_leq(const NoncrossingPartition& lambda,
               const NoncrossingPartition& mu) {
  return ncp_leq(lambda, mu);
}

std::vector<Permutation> dominated_permutations(
    const NoncrossingPartition& mu) {
  return dominated_permutations(mu, default_caps().partition);
}

std::vector<Permutation> dominated_permutations(const NoncrossingPartition& mu,
                                                int cap) {
  const int n = mu.n();
  if (n > effective_cap(cap))
    throw std::invalid_argument("dominated_permutations: n exceeds cap " +
                                std::to_string(effective_cap(cap)));
  Permutation q = qsv_permutation(mu);
  std::vector<Permutation> down;
  for (const auto& w : symmetric_group(n))
    if (bruhat_leq(w, q)) down.push_back(w);

  // the down-set must be exactly the union of the classes below mu
  std::vector<Permutation> unioned;
  for (const auto& c : partition_into_classes(n, cap))
    if (ncp_leq(c.shape, mu))
      unioned.insert(unioned.end(), c.members.begin(), c.members.end());
  std::sort(unioned.begin(), unioned.end());
  if (down != unioned)
    throw std::logic_error("down-set of Q differs from the union of classes");
  return down;
}

TableauCount tableau_count_check(const Permutation& w, int k) {
  if (k < 1 || k > w.n())
    throw std::invalid_argument("tableau_count_check: k out of range");
  TableauCount c{0, 0};
  for (int i = 1; i <= w.n(); ++i) {
    if (i > k && w(i) < k) ++c.low;
    if (i <= k && w(i) > k) ++c.high;
  }
  EndpointDeficit d = endpoint_deficit(excedance_class_of(w), k);
  if (c.low != d.open || c.high != d.closed)
    throw std::logic_error("tableau counts differ from endpoint deficits");
  return c;
}

}  // namespace qsv
