#include "qsv/ncp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qsv/config.hpp"

namespace qsv {

NoncrossingPartition::NoncrossingPartition(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("negative diagram size");
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_)
    if (a.first < 1 || a.first >= a.second || a.second > n_)
      throw std::invalid_argument("arc endpoints out of range");
  // the verbatim diagram condition, checked over all ordered pairs
  for (const Arc& ik : arcs_)
    for (const Arc& jl : arcs_) {
      if (&ik == &jl) continue;
      if (ik.first <= jl.first && jl.first < ik.second &&
          ik.second <= jl.second)
        throw std::invalid_argument("arcs cross or share a side");
    }
}

namespace {

// Diagrams on a block of `size` elements starting at label `lo`.
std::vector<std::vector<Arc>> generate(int lo, int size) {
  std::vector<std::vector<Arc>> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  const int last = lo + size - 1;
  // last element isolated
  for (auto& left : generate(lo, size - 1)) out.push_back(std::move(left));
  // arc (i, last): elements strictly between are a self-contained diagram,
  // and i is free to keep connections to its own left
  for (int i = lo; i < last; ++i) {
    for (const auto& left : generate(lo, i - lo + 1))
      for (const auto& inner : generate(i + 1, last - i - 1)) {
        std::vector<Arc> arcs = left;
        arcs.insert(arcs.end(), inner.begin(), inner.end());
        arcs.emplace_back(i, last);
        out.push_back(std::move(arcs));
      }
  }
  return out;
}

}  // namespace

std::vector<NoncrossingPartition> enumerate_ncp(int n) {
  return enumerate_ncp(n, default_caps().enumerate);
}

std::vector<NoncrossingPartition> enumerate_ncp(int n, int cap) {
  if (n > effective_cap(cap))
    throw std::invalid_argument("enumerate_ncp: n exceeds cap " +
                                std::to_string(effective_cap(cap)));
  std::vector<NoncrossingPartition> out;
  for (auto& arcs : generate(1, n))
    out.emplace_back(n, std::move(arcs));  // constructor re-validates
  std::sort(out.begin(), out.end());
  return out;
}

EndpointSets endpoint_sets(const NoncrossingPartition& lambda) {
  EndpointSets s;
  for (const Arc& a : lambda.arcs()) {
    s.left.push_back(a.first);
    s.right.push_back(a.second);
  }
  std::sort(s.right.begin(), s.right.end());  // left is sorted already
  return s;
}

NoncrossingPartition match_endpoints(int n, const std::vector<int>& L,
                                     const std::vector<int>& R) {
  if (L.size() != R.size())
    throw std::invalid_argument("match_endpoints: |L| != |R|");
  std::vector<char> isL(static_cast<size_t>(n) + 1, 0),
      isR(static_cast<size_t>(n) + 1, 0);
  for (int x : L) {
    if (x < 1 || x > n) throw std::invalid_argument("L element out of range");
    isL[static_cast<size_t>(x)] = 1;
  }
  for (int x : R) {
    if (x < 1 || x > n) throw std::invalid_argument("R element out of range");
    isR[static_cast<size_t>(x)] = 1;
  }
  std::vector<Arc> arcs;
  std::vector<int> open;  // stack of unmatched left endpoints
  for (int k = 1; k <= n; ++k) {
    // close before open: k may end one arc and begin another
    if (isR[static_cast<size_t>(k)]) {
      if (open.empty())
        throw std::invalid_argument(
            "match_endpoints: prefix inequality fails at k=" +
            std::to_string(k));
      arcs.emplace_back(open.back(), k);
      open.pop_back();
    }
    if (isL[static_cast<size_t>(k)]) open.push_back(k);
  }
  return NoncrossingPartition(n, std::move(arcs));
}

std::vector<std::vector<int>> connected_components(
    const NoncrossingPartition& lambda) {
  const int n = lambda.n();
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Arc& a : lambda.arcs())
    parent[static_cast<size_t>(find(a.first))] = find(a.second);
  std::vector<std::vector<int>> byroot(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    byroot[static_cast<size_t>(find(i))].push_back(i);
  std::vector<std::vector<int>> comps;
  for (auto& c : byroot)
    if (!c.empty()) comps.push_back(std::move(c));  // already sorted, min first
  std::sort(comps.begin(), comps.end());
  return comps;
}

BallotSequence ballot_sequence(const NoncrossingPartition& lambda) {
  const int n = lambda.n();
  std::vector<char> isL(static_cast<size_t>(n) + 1, 0),
      isR(static_cast<size_t>(n) + 1, 0);
  for (const Arc& a : lambda.arcs()) {
    isL[static_cast<size_t>(a.first)] = 1;
    isR[static_cast<size_t>(a.second)] = 1;
  }
  BallotSequence b;
  b.reserve(2 * static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    b.push_back(isR[static_cast<size_t>(k)] ? -1 : +1);
    b.push_back(isL[static_cast<size_t>(k)] ? +1 : -1);
  }
  int sum = 0;
  for (int step : b) {
    sum += step;
    if (sum < 0) throw std::logic_error("ballot prefix sum went negative");
  }
  if (sum != 0) throw std::logic_error("ballot total sum nonzero");
  return b;
}

bool ncp_leq(const NoncrossingPartition& lambda,
             const NoncrossingPartition& mu) {
  if (lambda.n() != mu.n())
    throw std::invalid_argument("ncp_leq: size mismatch");
  BallotSequence a = ballot_sequence(lambda), b = ballot_sequence(mu);
  int sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

std::vector<NoncrossingPartition> ncp_covers(const NoncrossingPartition& mu) {
  std::vector<NoncrossingPartition> out;
  const auto& arcs = mu.arcs();
  for (size_t t = 0; t < arcs.size(); ++t) {
    // move 1: drop a length-one arc
    if (arcs[t].second == arcs[t].first + 1) {
      std::vector<Arc> rest;
      for (size_t s = 0; s < arcs.size(); ++s)
        if (s != t) rest.push_back(arcs[s]);
      out.emplace_back(mu.n(), std::move(rest));
    }
    // move 2: split (i,k) at every interior j that keeps the diagram valid
    for (int j = arcs[t].first + 1; j < arcs[t].second; ++j) {
      std::vector<Arc> cand;
      for (size_t s = 0; s < arcs.size(); ++s)
        if (s != t) cand.push_back(arcs[s]);
      cand.emplace_back(arcs[t].first, j);
      cand.emplace_back(j, arcs[t].second);
      try {
        NoncrossingPartition lower(mu.n(), std::move(cand));
        out.push_back(std::move(lower));
      } catch (const std::invalid_argument&) {
        // j collided with an arc under (i,k); not a legal split
      }
    }
  }
  std::sort(out.begin(), out.end());
  for (const auto& lambda : out)
    if (!ncp_leq(lambda, mu)) throw std::logic_error("covering move went up");
  return out;
}

EndpointDeficit endpoint_deficit(const NoncrossingPartition& lambda, int k) {
  if (k < 1 || k > lambda.n())
    throw std::invalid_argument("endpoint_deficit: k out of range");
  EndpointDeficit d{0, 0};
  for (const Arc& a : lambda.arcs()) {
    if (a.first <= k - 1) ++d.open;
    if (a.first <= k) ++d.closed;
    if (a.second <= k) {
      --d.open;
      --d.closed;
    }
  }
  return d;
}

}  // namespace qsv
