#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qsv/classes.hpp"
#include "util.hpp"

using namespace qsv;
using qsvtest::catalan;
using qsvtest::N;
using qsvtest::P;

namespace {

// Independent oracle: the members of the class of lambda, found by scanning
// S_n for the complement profile directly.
std::vector<Permutation> brute_class(const NoncrossingPartition& lambda) {
  EndpointSets s = endpoint_sets(lambda);
  std::vector<int> val, pos;
  for (int x = 1; x <= lambda.n(); ++x) {
    if (!std::count(s.left.begin(), s.left.end(), x)) val.push_back(x);
    if (!std::count(s.right.begin(), s.right.end(), x)) pos.push_back(x);
  }
  std::vector<Permutation> out;
  for (const auto& w : symmetric_group(lambda.n())) {
    ExcedanceProfile p = excedance_profile(w);
    if (p.values == val && p.positions == pos) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("Q of the worked diagrams") {
  std::vector<Arc> chain;
  for (int i = 1; i < 7; ++i) chain.emplace_back(i, i + 1);
  CHECK(qsv_permutation(N(7, chain)) == P({7, 1, 2, 3, 4, 5, 6}));
  CHECK(qsv_permutation(N(7, {{2, 7}, {3, 5}, {5, 6}})) ==
        P({1, 7, 6, 4, 3, 5, 2}));
  CHECK(qsv_permutation(N(4, {})) == Permutation::identity(4));
}

TEST_CASE("QSV_3 is the displayed list") {
  std::set<Permutation> expect{P({3, 2, 1}), P({3, 1, 2}), P({2, 1, 3}),
                               P({1, 3, 2}), P({1, 2, 3})};
  auto got = enumerate_qsv(3);
  CHECK(std::set<Permutation>(got.begin(), got.end()) == expect);
}

TEST_CASE("QSV counts and the profile bijection") {
  CHECK(enumerate_qsv(0) == std::vector<Permutation>{Permutation()});
  CHECK(enumerate_qsv(5).size() == 42);
  for (int n = 0; n <= 8; ++n) {
    auto qs = enumerate_qsv(n);
    CHECK(static_cast<long>(qs.size()) == catalan(n));
    for (const auto& lambda : enumerate_ncp(n)) {
      // Q's profile is the complement of the endpoint sets
      Permutation q = qsv_permutation(lambda);
      ExcedanceProfile p = excedance_profile(q);
      EndpointSets s = endpoint_sets(lambda);
      std::vector<int> val, pos;
      for (int x = 1; x <= n; ++x) {
        if (!std::count(s.left.begin(), s.left.end(), x)) val.push_back(x);
        if (!std::count(s.right.begin(), s.right.end(), x)) pos.push_back(x);
      }
      CHECK(p.values == val);
      CHECK(p.positions == pos);
      // both library round-trips recover lambda
      CHECK(excedance_class_of(q) == lambda);
      CHECK(excedance_class_of(min_permutation(lambda)) == lambda);
    }
  }
}

TEST_CASE("T of the worked diagrams") {
  CHECK(min_permutation(N(8, {{1, 5}, {2, 3}, {5, 7}})) ==
        P({3, 4, 1, 6, 2, 7, 5, 8}));
  CHECK(min_permutation(N(4, {})) == Permutation::identity(4));
  CHECK(min_permutation(N(3, {{1, 3}})) == P({2, 3, 1}));
}

TEST_CASE("T is the Bruhat minimum of its class and Q the maximum") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : enumerate_ncp(n)) {
      auto members = brute_class(lambda);
      Permutation t = min_permutation(lambda), q = qsv_permutation(lambda);
      CHECK(std::count(members.begin(), members.end(), t) == 1);
      CHECK(std::count(members.begin(), members.end(), q) == 1);
      for (const auto& w : members) {
        CHECK(bruhat_leq(t, w));
        CHECK(bruhat_leq(w, q));
        if (w != t) CHECK_FALSE(bruhat_leq(w, t));
        if (w != q) CHECK_FALSE(bruhat_leq(q, w));
      }
    }
}

TEST_CASE("T ranges over exactly the 321-avoiders") {
  for (int n = 0; n <= 6; ++n) {
    std::set<Permutation> mins;
    for (const auto& lambda : enumerate_ncp(n)) {
      Permutation t = min_permutation(lambda);
      CHECK(is_321_avoiding(t));
      mins.insert(t);
    }
    std::set<Permutation> avoiders;
    for (const auto& w : symmetric_group(n))
      if (is_321_avoiding(w)) avoiders.insert(w);
    CHECK(mins == avoiders);
  }
}

TEST_CASE("shape of a permutation") {
  CHECK(excedance_class_of(P({2, 3, 1})) == N(3, {{1, 3}}));
  CHECK(excedance_class_of(Permutation::identity(6)) == N(6, {}));
  // repaired form of the malformed worked word: profile complements
  // L={1,2,6}, R={3,5,7} match to these three arcs
  CHECK(excedance_class_of(P({3, 5, 1, 4, 2, 7, 6, 8})) ==
        N(8, {{1, 5}, {2, 3}, {6, 7}}));
}

TEST_CASE("partition of S_3 into the five displayed classes") {
  auto classes = partition_into_classes(3);
  REQUIRE(classes.size() == 5);
  std::map<NoncrossingPartition, std::vector<Permutation>> got;
  for (const auto& c : classes) got[c.shape] = c.members;
  CHECK(got[N(3, {})] == std::vector<Permutation>{P({1, 2, 3})});
  CHECK(got[N(3, {{1, 2}})] == std::vector<Permutation>{P({2, 1, 3})});
  CHECK(got[N(3, {{2, 3}})] == std::vector<Permutation>{P({1, 3, 2})});
  CHECK(got[N(3, {{1, 2}, {2, 3}})] == std::vector<Permutation>{P({3, 1, 2})});
  CHECK(got[N(3, {{1, 3}})] ==
        std::vector<Permutation>{P({2, 3, 1}), P({3, 2, 1})});
}

TEST_CASE("partition covers S_n with C_n classes") {
  CHECK(partition_into_classes(1).size() == 1);
  for (int n = 0; n <= 6; ++n) {
    auto classes = partition_into_classes(n);
    CHECK(static_cast<long>(classes.size()) == catalan(n));
    size_t total = 0;
    std::set<Permutation> seen;
    for (const auto& c : classes) {
      total += c.members.size();
      seen.insert(c.members.begin(), c.members.end());
      CHECK(c.members == brute_class(c.shape));
      CHECK(c.min_elt == min_permutation(c.shape));
      CHECK(c.max_elt == qsv_permutation(c.shape));
    }
    CHECK(total == seen.size());  // disjoint
    CHECK(total == symmetric_group(n).size());
  }
  CHECK_THROWS_AS(partition_into_classes(8), std::invalid_argument);
}

TEST_CASE("classes are Bruhat intervals") {
  for (int n = 0; n <= 5; ++n) {
    auto classes = partition_into_classes(n);
    for (const auto& c : classes)
      for (const auto& w : symmetric_group(n)) {
        bool member =
            std::binary_search(c.members.begin(), c.members.end(), w);
        bool inside = bruhat_leq(c.min_elt, w) && bruhat_leq(w, c.max_elt);
        CHECK(member == inside);
      }
  }
}

TEST_CASE("quotient order: exists-pair relation equals the shape order") {
  for (int n = 0; n <= 5; ++n) {
    BruhatOrderTable oracle = bruhat_covering_closure(n);
    auto classes = partition_into_classes(n);
    for (const auto& a : classes)
      for (const auto& b : classes) {
        bool exists = false;
        for (const auto& v : a.members) {
          for (const auto& w : b.members)
            if (oracle.leq(v, w)) {
              exists = true;
              break;
            }
          if (exists) break;
        }
        CHECK(exists == class_leq(a.shape, b.shape));
      }
  }
}

TEST_CASE("order bijection: Bruhat on Q agrees with the shape order") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : enumerate_ncp(n))
      for (const auto& mu : enumerate_ncp(n))
        CHECK(bruhat_leq(qsv_permutation(lambda), qsv_permutation(mu)) ==
              ncp_leq(lambda, mu));
}

TEST_CASE("class_leq examples") {
  for (const auto& lambda : enumerate_ncp(4))
    CHECK(class_leq(N(4, {}), lambda));
  CHECK(class_leq(N(3, {{1, 2}}), N(3, {{1, 3}})));
  CHECK_FALSE(class_leq(N(3, {{1, 2}}), N(3, {{2, 3}})));
}

TEST_CASE("down-sets of Q") {
  CHECK(dominated_permutations(N(3, {})) ==
        std::vector<Permutation>{Permutation::identity(3)});
  CHECK(dominated_permutations(N(3, {{1, 3}})) == symmetric_group(3));

  // {1-2,3-4}: the union of the four classes at or below it
  auto down = dominated_permutations(N(4, {{1, 2}, {3, 4}}));
  std::vector<Permutation> expect;
  for (const auto& shape :
       {N(4, {}), N(4, {{1, 2}}), N(4, {{3, 4}}), N(4, {{1, 2}, {3, 4}})}) {
    auto cls = brute_class(shape);
    expect.insert(expect.end(), cls.begin(), cls.end());
  }
  std::sort(expect.begin(), expect.end());
  CHECK(down == expect);

  // the in-op disjoint-union assertion runs for every mu up to n=5
  for (int n = 0; n <= 5; ++n) {
    BruhatOrderTable oracle = bruhat_covering_closure(n);
    for (const auto& mu : enumerate_ncp(n)) {
      auto d = dominated_permutations(mu);
      // cross-check against the closure oracle's down-set
      Permutation q = qsv_permutation(mu);
      std::vector<Permutation> byoracle;
      for (int idx : oracle.downset(q)) byoracle.push_back(oracle.elements()[idx]);
      std::sort(byoracle.begin(), byoracle.end());
      CHECK(d == byoracle);
    }
  }
}

TEST_CASE("tableau counts equal endpoint deficits") {
  for (int k = 1; k <= 5; ++k)
    CHECK(tableau_count_check(Permutation::identity(5), k) ==
          TableauCount{0, 0});
  CHECK(tableau_count_check(P({3, 2, 1}), 1) == TableauCount{0, 1});
  {
    Permutation q = P({1, 7, 6, 4, 3, 5, 2});
    EndpointDeficit d = endpoint_deficit(N(7, {{2, 7}, {3, 5}, {5, 6}}), 4);
    TableauCount c = tableau_count_check(q, 4);
    CHECK(c.low == d.open);
    CHECK(c.high == d.closed);
  }
  // the identity is asserted inside the call; sweep every w and k
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : symmetric_group(n))
      for (int k = 1; k <= n; ++k) CHECK_NOTHROW(tableau_count_check(w, k));
  CHECK_THROWS_AS(tableau_count_check(P({2, 1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(tableau_count_check(P({2, 1}), 3), std::invalid_argument);
}

TEST_CASE("strict-excedance classes are the conjugated weak classes") {
  for (int n = 0; n <= 6; ++n) {
    // oracle: bucket S_n by the strict profile directly
    std::map<std::pair<std::vector<int>, std::vector<int>>,
             std::vector<Permutation>>
        buckets;
    for (const auto& w : symmetric_group(n)) {
      std::vector<int> pos, val;
      for (int i = 1; i <= n; ++i)
        if (w(i) > i) {
          pos.push_back(i);
          val.push_back(w(i));
        }
      std::sort(val.begin(), val.end());
      buckets[{pos, val}].push_back(w);
    }
    for (const auto& [profile, members] : buckets)
      for (const auto& w : members)
        CHECK(strict_excedance_class_of(w) ==
              strict_excedance_class_of(members.front()));
    // distinct buckets get distinct shapes
    std::set<NoncrossingPartition> shapes;
    for (const auto& [profile, members] : buckets)
      shapes.insert(strict_excedance_class_of(members.front()));
    CHECK(shapes.size() == buckets.size());
  }
}
