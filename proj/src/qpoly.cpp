#include "qsv/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("Composition: must be non-empty");
  }
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
  }
}

int Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<std::pair<Composition, std::vector<int>>> coarsenings(
    const Composition& alpha) {
  const int k = alpha.length();
  std::vector<std::pair<Composition, std::vector<int>>> out;
  out.reserve(1u << (k - 1));
  // each subset of the inner split points {2, ..., k} yields one coarsening
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<int> f{1};
    for (int t = 0; t < k - 1; ++t) {
      if (mask & (1u << t)) f.push_back(t + 2);
    }
    f.push_back(k + 1);
    std::vector<int> beta;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      int sum = 0;
      for (int s = f[i]; s < f[i + 1]; ++s) sum += alpha.part(s);
      beta.push_back(sum);
    }
    out.emplace_back(Composition(std::move(beta)), std::move(f));
  }
  return out;
}

std::vector<Composition> compositions_of(int d) {
  if (d < 1) throw std::invalid_argument("compositions_of: size must be >= 1");
  // first parts chosen by increasing value; collect recursively
  std::vector<Composition> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      prefix.push_back(p);
      self(self, rest - p);
      prefix.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

bool GrlexGreater::operator()(const std::vector<int>& a,
                              const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // x_1 carries the highest precedence
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial f(n);
  f.add_term(std::vector<int>(static_cast<size_t>(n), 0), c);
  return f;
}

Polynomial Polynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("variable: index out of range");
  Polynomial f(n);
  std::vector<int> e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(i) - 1] = 1;
  f.add_term(e, Rational(1));
  return f;
}

Rational Polynomial::coefficient(const std::vector<int>& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) {
    throw std::invalid_argument("total_degree: zero polynomial");
  }
  // grlex-greater ordering puts a maximal-degree term first
  const std::vector<int>& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0);
}

void Polynomial::add_term(const std::vector<int>& exponent, const Rational& c) {
  if (static_cast<int>(exponent.size()) != n_) {
    throw std::invalid_argument("add_term: exponent width mismatch");
  }
  for (int e : exponent) {
    if (e < 0) throw std::invalid_argument("add_term: negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  if (f.n() != g.n()) throw std::invalid_argument("polynomial width mismatch");
  Polynomial out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  if (f.n() != g.n()) throw std::invalid_argument("polynomial width mismatch");
  Polynomial out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, -c);
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.n() != g.n()) throw std::invalid_argument("polynomial width mismatch");
  Polynomial out(f.n());
  std::vector<int> e(static_cast<size_t>(f.n()));
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      out.add_term(e, cf * cg);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial out(f.n());
  if (c == 0) return out;
  for (const auto& [e, cf] : f.terms()) out.add_term(e, c * cf);
  return out;
}

namespace {

// increasing tuples 1 <= i_1 < ... < i_l <= n
void for_each_tuple(int n, int l, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(static_cast<size_t>(l));
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == l) {
      fn(tuple);
      return;
    }
    for (int i = lo; i <= n - (l - pos - 1); ++i) {
      tuple[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

Polynomial monomial_qsym(const Composition& alpha, int n) {
  if (alpha.length() > n) {
    throw std::invalid_argument("monomial_qsym: more parts than variables");
  }
  Polynomial out(n);
  for_each_tuple(n, alpha.length(), [&](const std::vector<int>& tuple) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int j = 1; j <= alpha.length(); ++j) {
      e[static_cast<size_t>(tuple[static_cast<size_t>(j) - 1]) - 1] =
          alpha.part(j);
    }
    out.add_term(e, Rational(1));
  });
  return out;
}

Polynomial vanishing_poly(const Composition& alpha, int n) {
  if (alpha.length() > n) {
    throw std::invalid_argument("vanishing_poly: more parts than variables");
  }
  Polynomial out(n);
  for (const auto& [beta, f] : coarsenings(alpha)) {
    const int l = beta.length();
    for_each_tuple(n, l, [&](const std::vector<int>& tuple) {
      Polynomial prod = Polynomial::constant(n, Rational(1));
      Rational scalar(1);
      for (int j = 1; j <= l; ++j) {
        const int i_j = tuple[static_cast<size_t>(j) - 1];
        const int lead = alpha.part(f[static_cast<size_t>(j) - 1]);
        Polynomial factor(n);
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(tuple[static_cast<size_t>(j) - 1]) - 1] = lead;
        factor.add_term(e, Rational(1));
        factor.add_term(
            std::vector<int>(static_cast<size_t>(n), 0),
            Rational(-int_pow(i_j, static_cast<unsigned long>(lead))));
        prod = prod * factor;
        // each absorbed part contributes one factor -(i_j^part)
        for (int s = f[static_cast<size_t>(j) - 1] + 1;
             s < f[static_cast<size_t>(j)]; ++s) {
          scalar *= Rational(-int_pow(
              i_j, static_cast<unsigned long>(alpha.part(s))));
        }
      }
      Polynomial scaled = scalar * prod;
      for (const auto& [e, c] : scaled.terms()) out.add_term(e, c);
    });
  }
  return out;
}

Polynomial top_component(const Polynomial& f) {
  if (f.is_zero()) {
    throw std::invalid_argument("top_component: zero polynomial");
  }
  const int top = f.total_degree();
  Polynomial out(f.n());
  for (const auto& [e, c] : f.terms()) {
    if (std::accumulate(e.begin(), e.end(), 0) == top) out.add_term(e, c);
  }
  return out;
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) < f.n()) {
    throw std::invalid_argument("evaluate: too few coordinates");
  }
  Rational total(0);
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (int p = 0; p < e[i]; ++p) term *= point[i];
    }
    total += term;
  }
  return total;
}

Rational evaluate_at_permutation(const Polynomial& f, const Permutation& sigma) {
  if (sigma.n() < f.n()) {
    throw std::invalid_argument(
        "evaluate_at_permutation: permutation too short");
  }
  std::vector<Rational> point;
  point.reserve(static_cast<size_t>(sigma.n()));
  for (int i = 1; i <= sigma.n(); ++i) point.emplace_back(sigma(i));
  return evaluate(f, point);
}

Rational single_cycle_expansion(const Composition& alpha,
                                const Permutation& sigma) {
  const int n = sigma.n();
  std::vector<int> cycle;  // the non-fixed points a_1 < ... < a_m
  for (int i = 1; i <= n; ++i) {
    if (sigma(i) != i) cycle.push_back(i);
  }
  const int m = static_cast<int>(cycle.size());
  // the unique nontrivial cycle must step downward: a_i -> a_{i-1}, a_1 -> a_m
  for (int i = 0; i < m; ++i) {
    int expected = cycle[static_cast<size_t>((i + m - 1) % m)];
    if (sigma(cycle[static_cast<size_t>(i)]) != expected) {
      throw std::invalid_argument(
          "single_cycle_expansion: not a single decreasing cycle");
    }
  }

  Rational total(0);
  if (m > 0) {
    const int k = alpha.length();
    // weakly increasing position tuples j_1 <= ... <= j_k in [m], then the
    // epsilon vectors, with epsilon forced to 1 on a repeated position
    std::vector<int> j(static_cast<size_t>(k));
    std::vector<int> eps(static_cast<size_t>(k));
    auto a = [&](int idx) {  // a_0 = a_m convention
      return static_cast<long>(cycle[static_cast<size_t>((idx + m - 1) % m)]);
    };
    auto sum_eps = [&](auto&& self, int i) -> void {
      if (i == k) {
        int sign = 0;
        Rational term(1);
        for (int t = 0; t < k; ++t) {
          sign += eps[static_cast<size_t>(t)];
          term *= Rational(
              int_pow(a(j[static_cast<size_t>(t)] - 1 +
                        eps[static_cast<size_t>(t)]),
                      static_cast<unsigned long>(alpha.part(t + 1))));
        }
        total += (sign % 2 == 0) ? term : -term;
        return;
      }
      for (int e = (i > 0 && j[static_cast<size_t>(i)] ==
                                 j[static_cast<size_t>(i) - 1])
                       ? 1
                       : 0;
           e <= 1; ++e) {
        eps[static_cast<size_t>(i)] = e;
        self(self, i + 1);
      }
    };
    auto positions = [&](auto&& self, int i, int lo) -> void {
      if (i == k) {
        sum_eps(sum_eps, 0);
        return;
      }
      for (int p = lo; p <= m; ++p) {
        j[static_cast<size_t>(i)] = p;
        self(self, i + 1, p);
      }
    };
    positions(positions, 0, 1);
  }

  if (alpha.length() <= n) {
    Rational direct = evaluate_at_permutation(vanishing_poly(alpha, n), sigma);
    if (direct != total) {
      throw std::logic_error(
          "single_cycle_expansion: disagrees with direct evaluation");
    }
  }
  if (total != 0) {
    throw std::logic_error("single_cycle_expansion: nonzero sum");
  }
  return total;
}

}  // namespace qsv
