#include "qsv/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qsv/classes.hpp"
#include "qsv/config.hpp"

namespace qsv {

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<int> quotient_exponent(const std::vector<int>& num,
                                   const std::vector<int>& den) {
  std::vector<int> q(num.size());
  for (size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
  return q;
}

std::vector<int> lcm_exponent(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Polynomial monomial_times(const std::vector<int>& e, const Rational& c,
                          const Polynomial& f) {
  Polynomial out(f.n());
  std::vector<int> shifted(e.size());
  for (const auto& [ef, cf] : f.terms()) {
    for (size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] + ef[i];
    out.add_term(shifted, c * cf);
  }
  return out;
}

long catalan_number(int n) {
  std::vector<long> c{1};
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int i = 0; i < m; ++i) s += c[static_cast<size_t>(i)] *
                                     c[static_cast<size_t>(m - 1 - i)];
    c.push_back(s);
  }
  return c[static_cast<size_t>(n)];
}

std::vector<std::vector<int>> leading_monomials(
    const std::vector<Polynomial>& gb, const TermOrder& ord) {
  std::vector<std::vector<int>> lts;
  lts.reserve(gb.size());
  for (const Polynomial& g : gb) lts.push_back(leading_term(g, ord).first);
  std::sort(lts.begin(), lts.end());
  return lts;
}

}  // namespace

Term leading_term(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  auto it = f.terms().begin();
  Term best{it->first, it->second};
  for (++it; it != f.terms().end(); ++it) {
    if (ord.greater(it->first, best.first)) best = {it->first, it->second};
  }
  return best;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G,
                      const TermOrder& ord) {
  if (G.empty()) throw std::invalid_argument("divide: empty divisor list");
  for (const Polynomial& g : G) {
    if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    if (g.n() != f.n()) throw std::invalid_argument("divide: width mismatch");
  }
  DivisionResult res{std::vector<Polynomial>(G.size(), Polynomial(f.n())),
                     Polynomial(f.n())};
  Polynomial p = f;
  while (!p.is_zero()) {
    Term t = leading_term(p, ord);
    bool divided = false;
    for (size_t i = 0; i < G.size(); ++i) {
      const Term lg = leading_term(G[i], ord);
      if (!divides(lg.first, t.first)) continue;
      const std::vector<int> q = quotient_exponent(t.first, lg.first);
      const Rational c = t.second / lg.second;
      res.quotients[i].add_term(q, c);
      p = p - monomial_times(q, c, G[i]);
      divided = true;
      break;
    }
    if (!divided) {
      res.remainder.add_term(t.first, t.second);
      Polynomial lead(f.n());
      lead.add_term(t.first, t.second);
      p = p - lead;
    }
  }
  return res;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const TermOrder& ord) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) return {};
  const int n = basis.front().n();
  for (const Polynomial& g : basis) {
    if (g.n() != n) throw std::invalid_argument("buchberger: width mismatch");
  }

  // pair queue keyed by the lcm of the leading monomials (normal strategy)
  struct Pair {
    size_t i, j;
    std::vector<int> lcm;
  };
  auto lt_of = [&](size_t i) { return leading_term(basis[i], ord).first; };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, lcm_exponent(lt_of(i), lt_of(j))});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  std::set<std::pair<size_t, size_t>> handled;
  while (!pairs.empty()) {
    // smallest lcm first keeps intermediate growth down
    size_t best = 0;
    for (size_t t = 1; t < pairs.size(); ++t) {
      if (GrlexGreater{}(pairs[best].lcm, pairs[t].lcm)) best = t;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    handled.insert({pr.i, pr.j});

    const std::vector<int> li = lt_of(pr.i), lj = lt_of(pr.j);
    // first Buchberger criterion: coprime leading monomials
    bool coprime = true;
    for (size_t t = 0; t < li.size(); ++t) {
      if (li[t] > 0 && lj[t] > 0) coprime = false;
    }
    if (coprime) continue;
    // chain criterion: a third element dividing the lcm, both pairs done
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(lt_of(k), pr.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) {
        chained = true;
      }
    }
    if (chained) continue;

    const Term ti = leading_term(basis[pr.i], ord);
    const Term tj = leading_term(basis[pr.j], ord);
    Polynomial s =
        monomial_times(quotient_exponent(pr.lcm, ti.first),
                       Rational(1) / ti.second, basis[pr.i]) -
        monomial_times(quotient_exponent(pr.lcm, tj.first),
                       Rational(1) / tj.second, basis[pr.j]);
    if (s.is_zero()) continue;
    Polynomial r = divide(s, basis, ord).remainder;
    if (r.is_zero()) continue;
    basis.push_back(r);
    push_pairs_for(basis.size() - 1);
  }

  // minimalize: drop anything whose leading term another one divides
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const std::vector<int> li = lt_of(i);
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const std::vector<int> lj = leading_term(basis[j], ord).first;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // reduce every tail against the others and normalize to monic
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial r = others.empty()
                       ? minimal[i]
                       : divide(minimal[i], others, ord).remainder;
    reduced.push_back(Rational(1) / leading_term(r, ord).second * r);
  }

  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return GrlexGreater{}(leading_term(b, ord).first,
                                    leading_term(a, ord).first);
            });
  return reduced;
}

std::vector<std::vector<int>> standard_monomials(
    const std::vector<Polynomial>& gb, const TermOrder& ord) {
  if (gb.empty()) {
    throw std::invalid_argument("standard_monomials: empty basis");
  }
  const int n = gb.front().n();
  std::vector<std::vector<int>> lts;
  for (const Polynomial& g : gb) lts.push_back(leading_term(g, ord).first);

  // zero-dimensionality: every variable needs a pure power among the lts
  std::vector<int> bound(static_cast<size_t>(n), -1);
  for (const auto& lt : lts) {
    int nonzero = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (lt[static_cast<size_t>(i)] > 0) {
        if (nonzero >= 0) pure = false;
        nonzero = i;
      }
    }
    if (pure && nonzero >= 0) {
      int& b = bound[static_cast<size_t>(nonzero)];
      int e = lt[static_cast<size_t>(nonzero)];
      if (b < 0 || e < b) b = e;
    }
    if (pure && nonzero < 0) return {};  // the unit ideal has no monomials
  }
  for (int i = 0; i < n; ++i) {
    if (bound[static_cast<size_t>(i)] < 0) {
      throw std::invalid_argument(
          "standard_monomials: not zero-dimensional (variable x" +
          std::to_string(i + 1) + " has no pure power leading term)");
    }
  }

  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (const auto& lt : lts) {
        if (divides(lt, e)) return;
      }
      out.push_back(e);
      return;
    }
    for (int v = 0; v < bound[static_cast<size_t>(i)]; ++v) {
      e[static_cast<size_t>(i)] = v;
      self(self, i + 1);
    }
    e[static_cast<size_t>(i)] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return GrlexGreater{}(b, a);
            });
  return out;
}

IdealBasis point_vanishing_ideal(
    const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) {
    throw std::invalid_argument("point_vanishing_ideal: no points");
  }
  const size_t n = points.front().size();
  if (n == 0) throw std::invalid_argument("point_vanishing_ideal: dimension 0");
  for (const auto& p : points) {
    if (p.size() != n) {
      throw std::invalid_argument("point_vanishing_ideal: dimension mismatch");
    }
  }
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("point_vanishing_ideal: duplicate point");
      }
    }
  }

  const TermOrder ord;
  std::vector<Polynomial> gb;
  std::vector<std::vector<int>> standard;

  // echelon rows over the evaluation space, each paired with the polynomial
  // it evaluates from
  struct Row {
    std::vector<Rational> vec;
    Polynomial poly;
    size_t pivot;
  };
  std::vector<Row> rows;

  auto evaluate_monomial = [&](const std::vector<int>& e,
                               const std::vector<Rational>& pt) {
    Rational v(1);
    for (size_t i = 0; i < n; ++i) {
      for (int t = 0; t < e[i]; ++t) v *= pt[i];
    }
    return v;
  };

  // grlex-increasing frontier of candidate monomials
  std::set<std::vector<int>, decltype([](const std::vector<int>& a,
                                          const std::vector<int>& b) {
    return GrlexGreater{}(b, a);
  })> frontier;
  frontier.insert(std::vector<int>(n, 0));

  while (!frontier.empty()) {
    std::vector<int> m = *frontier.begin();
    frontier.erase(frontier.begin());
    bool in_lt_ideal = false;
    for (const Polynomial& g : gb) {
      if (divides(leading_term(g, ord).first, m)) in_lt_ideal = true;
    }
    if (in_lt_ideal) continue;

    Row row{{}, Polynomial(static_cast<int>(n)), 0};
    row.vec.reserve(points.size());
    for (const auto& pt : points) row.vec.push_back(evaluate_monomial(m, pt));
    row.poly.add_term(m, Rational(1));
    for (const Row& r : rows) {
      const Rational& x = row.vec[r.pivot];
      if (x == 0) continue;
      Rational f = x / r.vec[r.pivot];
      for (size_t c = 0; c < row.vec.size(); ++c) row.vec[c] -= f * r.vec[c];
      row.poly = row.poly - f * r.poly;
    }
    size_t p = 0;
    while (p < row.vec.size() && row.vec[p] == 0) ++p;
    if (p == row.vec.size()) {
      // vanishes at every point; by construction its leading term is m
      gb.push_back(row.poly);
    } else {
      row.pivot = p;
      rows.push_back(std::move(row));
      standard.push_back(m);
      for (size_t i = 0; i < n; ++i) {
        std::vector<int> next = m;
        ++next[i];
        frontier.insert(next);
      }
    }
  }

  if (standard.size() != points.size()) {
    throw std::logic_error(
        "point_vanishing_ideal: standard monomials do not match point count");
  }

  IdealBasis out;
  out.n = static_cast<int>(n);
  std::sort(gb.begin(), gb.end(), [&](const Polynomial& a, const Polynomial& b) {
    return GrlexGreater{}(leading_term(b, ord).first,
                          leading_term(a, ord).first);
  });
  out.generators = gb;
  out.groebner = std::move(gb);
  return out;
}

namespace {

// shared saturation loop: add every generator of degree d, recompute, stop
// when the standard-monomial count repeats across consecutive degrees
std::pair<int, IdealBasis> saturate(
    int n, const TermOrder& ord, int cap, int max_degree,
    const std::function<Polynomial(const Composition&, int)>& make) {
  if (n < 1) throw std::invalid_argument("saturate: n must be >= 1");
  if (n > cap) {
    throw std::invalid_argument("saturate: n exceeds the brute-force cap " +
                                std::to_string(cap));
  }
  if (max_degree <= 0) max_degree = n * (n - 1) / 2 + 2;
  std::vector<Polynomial> gens;
  long previous = -1;
  for (int d = 1; d <= max_degree; ++d) {
    for (const Composition& alpha : compositions_of(d)) {
      if (alpha.length() <= n) gens.push_back(make(alpha, n));
    }
    std::vector<Polynomial> gb = buchberger(gens, ord);
    long count = -1;
    try {
      count = static_cast<long>(standard_monomials(gb, ord).size());
    } catch (const std::invalid_argument&) {
      // not yet zero-dimensional; keep adding degrees
    }
    if (count >= 0 && count == previous) {
      IdealBasis basis;
      basis.n = n;
      basis.generators = std::move(gens);
      basis.groebner = std::move(gb);
      if (count != catalan_number(n)) {
        throw std::logic_error(
            "saturate: stabilized dimension is not the Catalan number");
      }
      return {d, basis};
    }
    previous = count;
  }
  throw std::runtime_error(
      "saturate: no stabilization by degree " + std::to_string(max_degree));
}

}  // namespace

std::pair<int, IdealBasis> saturate_qsym_generators(int n, const TermOrder& ord,
                                                    int cap, int max_degree) {
  return saturate(n, ord, cap, max_degree,
                  [](const Composition& a, int vars) {
                    return monomial_qsym(a, vars);
                  });
}

std::pair<int, IdealBasis> saturate_qsym_generators(int n,
                                                    const TermOrder& ord) {
  return saturate_qsym_generators(n, ord,
                                  effective_cap(default_caps().groebner));
}

std::pair<int, IdealBasis> saturate_vanishing_generators(int n,
                                                         const TermOrder& ord,
                                                         int cap,
                                                         int max_degree) {
  return saturate(n, ord, cap, max_degree,
                  [](const Composition& a, int vars) {
                    return vanishing_poly(a, vars);
                  });
}

std::pair<int, IdealBasis> saturate_vanishing_generators(int n,
                                                         const TermOrder& ord) {
  return saturate_vanishing_generators(n, ord,
                                       effective_cap(default_caps().groebner));
}

bool verify_grin(const std::vector<Polynomial>& gens, const TermOrder& ord) {
  std::vector<Polynomial> gb = buchberger(gens, ord);
  standard_monomials(gb, ord);  // throws unless zero-dimensional
  std::vector<Polynomial> tops;
  tops.reserve(gb.size());
  for (const Polynomial& g : gb) tops.push_back(top_component(g));
  std::vector<Polynomial> gb_top = buchberger(tops, ord);
  return leading_monomials(gb, ord) == leading_monomials(gb_top, ord);
}

VanishingReport verify_theorem_vanishingQSV(int n, int cap, int max_degree) {
  VanishingReport report;
  report.n = n;
  report.catalan = catalan_number(n);
  const TermOrder ord;

  auto [degree_p, basis_p] =
      saturate_vanishing_generators(n, ord, cap, max_degree);
  report.vanishing_saturation_degree = degree_p;

  // (a) every generator vanishes at every point of the variety
  std::vector<Permutation> points = enumerate_qsv(n);
  for (int d = 1; d <= degree_p; ++d) {
    for (const Composition& alpha : compositions_of(d)) {
      if (alpha.length() > n) continue;
      Polynomial p = vanishing_poly(alpha, n);
      for (const Permutation& sigma : points) {
        if (evaluate_at_permutation(p, sigma) != 0) {
          throw std::logic_error(
              "verify_theorem_vanishingQSV: generator does not vanish");
        }
      }
    }
  }
  report.vanishing_on_points = true;

  // (b) the saturated vanishing ideal has Catalan codimension
  auto std_p = standard_monomials(*basis_p.groebner, ord);
  report.dimension = static_cast<long>(std_p.size());
  if (report.dimension != report.catalan) {
    throw std::logic_error(
        "verify_theorem_vanishingQSV: vanishing-ideal dimension is off");
  }
  report.vanishing_dimension = true;

  // (c) the interpolation oracle agrees on the dimension
  std::vector<std::vector<Rational>> coords;
  for (const Permutation& sigma : points) {
    std::vector<Rational> pt;
    for (int i = 1; i <= n; ++i) pt.emplace_back(sigma(i));
    coords.push_back(std::move(pt));
  }
  IdealBasis interp = point_vanishing_ideal(coords);
  auto std_points = standard_monomials(*interp.groebner, ord);
  if (static_cast<long>(std_points.size()) != report.catalan) {
    throw std::logic_error(
        "verify_theorem_vanishingQSV: point-ideal dimension is off");
  }
  report.points_dimension = true;

  // (d) identical leading-term ideals certify ideal equality outright
  if (leading_monomials(*basis_p.groebner, ord) !=
      leading_monomials(*interp.groebner, ord)) {
    throw std::logic_error(
        "verify_theorem_vanishingQSV: leading-term ideals differ");
  }
  report.leading_terms_match = true;

  // (e) the associated graded ideal matches the quasisymmetric ideal on
  // standard monomials
  auto [degree_m, basis_m] = saturate_qsym_generators(n, ord, cap, max_degree);
  report.qsym_saturation_degree = degree_m;
  if (standard_monomials(*basis_m.groebner, ord) != std_p) {
    throw std::logic_error(
        "verify_theorem_vanishingQSV: quasisymmetric standard monomials differ");
  }
  report.qsym_monomials_match = true;

  return report;
}

VanishingReport verify_theorem_vanishingQSV(int n) {
  return verify_theorem_vanishingQSV(n, effective_cap(default_caps().groebner));
}

}  // namespace qsv
