#include "qsv/verify.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "json.hpp"
#include "qsv/classes.hpp"
#include "qsv/config.hpp"
#include "qsv/groebner.hpp"
#include "qsv/io.hpp"
#include "qsv/ncp.hpp"
#include "qsv/perm.hpp"
#include "qsv/qpoly.hpp"
#include "qsv/tl.hpp"

namespace qsv {

namespace {

long catalan_number(int n) {
  std::vector<long> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
  }
  return c[n];
}

int nontrivial_cycle_count(const Permutation& w) {
  std::vector<bool> seen(static_cast<size_t>(w.n()) + 1, false);
  int count = 0;
  for (int start = 1; start <= w.n(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = start; !seen[x]; x = w(x)) {
      seen[x] = true;
      ++len;
    }
    if (len >= 2) ++count;
  }
  return count;
}

std::vector<Composition> compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int d = 1; d <= max_size; ++d) {
    for (const Composition& alpha : compositions_of(d)) out.push_back(alpha);
  }
  return out;
}

std::string composition_text(const Composition& alpha) {
  std::string out = "(";
  for (int i = 1; i <= alpha.length(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(alpha.part(i));
  }
  return out + ")";
}

// the fourteen-element section of the size-4 classes displayed in the
// source text of the section construction
std::vector<Permutation> displayed_section_4() {
  return {Permutation({4, 3, 1, 2}), Permutation({4, 2, 3, 1}),
          Permutation({4, 2, 1, 3}), Permutation({3, 1, 4, 2}),
          Permutation({1, 4, 3, 2}), Permutation({4, 1, 2, 3}),
          Permutation({3, 2, 1, 4}), Permutation({3, 1, 2, 4}),
          Permutation({2, 1, 4, 3}), Permutation({1, 4, 2, 3}),
          Permutation({2, 1, 3, 4}), Permutation({1, 3, 2, 4}),
          Permutation({1, 2, 4, 3}), Permutation({1, 2, 3, 4})};
}

}  // namespace

bool VerifyReport::pass() const {
  for (const SubCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void VerifyReport::add(const std::string& name, bool ok,
                       const std::string& detail) {
  checks.push_back({name, ok, detail});
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["n"] = report.n;
  if (!report.params.empty()) {
    nlohmann::ordered_json params;
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = std::move(params);
  }
  j["pass"] = report.pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const SubCheck& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& report) {
  std::string out = "theorem: " + report.theorem +
                    " (n=" + std::to_string(report.n) + ")\n";
  for (const auto& [key, value] : report.params) {
    out += key + "=" + value + "\n";
  }
  for (const SubCheck& c : report.checks) {
    out += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += std::string("result: ") + (report.pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

VerifyReport verify_interval(int n, int cap) {
  VerifyReport report;
  report.theorem = "interval";
  report.n = n;

  std::vector<ExcedanceClass> classes = partition_into_classes(n, cap);
  const long cn = catalan_number(n);
  report.add("class_count",
             static_cast<long>(classes.size()) == cn,
             std::to_string(classes.size()) + " classes, Catalan number is " +
                 std::to_string(cn));

  BruhatOrderTable closure = bruhat_covering_closure(n, cap);
  bool all_match = true;
  std::string witness;
  for (const ExcedanceClass& cls : classes) {
    std::vector<Permutation> interval;
    for (const Permutation& w : closure.elements()) {
      if (closure.leq(cls.min_elt, w) && closure.leq(w, cls.max_elt)) {
        interval.push_back(w);
      }
    }
    if (interval != cls.members) {
      all_match = false;
      witness = "class " + ncp_to_text(cls.shape) + " has " +
                std::to_string(cls.members.size()) +
                " members but the interval [" + perm_to_string(cls.min_elt) +
                ", " + perm_to_string(cls.max_elt) + "] has " +
                std::to_string(interval.size());
      break;
    }
  }
  report.add("classes_are_intervals", all_match,
             all_match ? "all " + std::to_string(classes.size()) +
                             " classes equal their closure-oracle intervals"
                       : witness);
  return report;
}

VerifyReport verify_interval(int n) {
  return verify_interval(n, effective_cap(default_caps().closure));
}

VerifyReport verify_quotient_order(int n, int cap) {
  VerifyReport report;
  report.theorem = "quotient-order";
  report.n = n;

  std::vector<ExcedanceClass> classes = partition_into_classes(n, cap);
  const size_t m = classes.size();

  // the exists-quantified relation lifted from member pairs
  std::vector<std::vector<bool>> induced(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      bool found = false;
      for (const Permutation& u : classes[i].members) {
        for (const Permutation& v : classes[j].members) {
          if (bruhat_leq(u, v)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      induced[i][j] = found;
    }
  }

  bool matches = true;
  std::string witness;
  for (size_t i = 0; i < m && matches; ++i) {
    for (size_t j = 0; j < m && matches; ++j) {
      if (induced[i][j] != ncp_leq(classes[i].shape, classes[j].shape)) {
        matches = false;
        witness = "shapes " + ncp_to_text(classes[i].shape) + " vs " +
                  ncp_to_text(classes[j].shape) + ": induced=" +
                  (induced[i][j] ? "true" : "false") +
                  ", prefix-dominance says the opposite";
      }
    }
  }
  report.add("induced_equals_shape_order", matches,
             matches ? "all " + std::to_string(m * m) + " class pairs agree"
                     : witness);

  bool antisym = true;
  for (size_t i = 0; i < m && antisym; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i != j && induced[i][j] && induced[j][i]) {
        antisym = false;
        break;
      }
    }
  }
  report.add("antisymmetry", antisym,
             antisym ? "no distinct mutually related classes"
                     : "two distinct classes relate both ways");

  bool transitive = true;
  for (size_t i = 0; i < m && transitive; ++i) {
    for (size_t j = 0; j < m && transitive; ++j) {
      if (!induced[i][j]) continue;
      for (size_t k = 0; k < m; ++k) {
        if (induced[j][k] && !induced[i][k]) {
          transitive = false;
          break;
        }
      }
    }
  }
  report.add("transitivity", transitive,
             transitive ? "relation closed under composition"
                        : "a two-step chain escapes the relation");

  // Bruhat order restricted to the class maxima
  bool maxima_agree = true;
  std::string maxima_witness;
  for (size_t i = 0; i < m && maxima_agree; ++i) {
    for (size_t j = 0; j < m && maxima_agree; ++j) {
      if (bruhat_leq(classes[i].max_elt, classes[j].max_elt) !=
          ncp_leq(classes[i].shape, classes[j].shape)) {
        maxima_agree = false;
        maxima_witness = "maxima " + perm_to_string(classes[i].max_elt) +
                         " vs " + perm_to_string(classes[j].max_elt) +
                         " disagree with prefix dominance";
      }
    }
  }
  report.add("bruhat_on_maxima_agrees", maxima_agree,
             maxima_agree ? "Bruhat on the distinguished permutations matches "
                            "prefix dominance on all pairs"
                          : maxima_witness);

  // reflexive-transitive closure of the covering moves
  std::map<NoncrossingPartition, size_t> index;
  for (size_t i = 0; i < m; ++i) index[classes[i].shape] = i;
  std::vector<std::vector<bool>> closure(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i) {
    closure[i][i] = true;
    for (const NoncrossingPartition& below : ncp_covers(classes[i].shape)) {
      closure[index.at(below)][i] = true;
    }
  }
  for (size_t k = 0; k < m; ++k) {
    for (size_t i = 0; i < m; ++i) {
      if (!closure[i][k]) continue;
      for (size_t j = 0; j < m; ++j) {
        if (closure[k][j]) closure[i][j] = true;
      }
    }
  }
  bool closure_agrees = true;
  for (size_t i = 0; i < m && closure_agrees; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (closure[i][j] != ncp_leq(classes[i].shape, classes[j].shape)) {
        closure_agrees = false;
        break;
      }
    }
  }
  report.add("covering_closure_agrees", closure_agrees,
             closure_agrees ? "covering-move closure equals prefix dominance"
                            : "covering-move closure differs from prefix "
                              "dominance");
  return report;
}

VerifyReport verify_quotient_order(int n) {
  return verify_quotient_order(n, effective_cap(default_caps().partition));
}

VerifyReport verify_tl_basis(int n, int cap) {
  VerifyReport report;
  report.theorem = "tl-basis";
  report.n = n;

  std::vector<Permutation> distinguished = enumerate_qsv(n, cap);
  const long cn = catalan_number(n);
  bool full_rank = basis_check(distinguished);
  report.add("distinguished_full_rank", full_rank,
             "rank of " + std::to_string(distinguished.size()) +
                 " expansion rows over the avoiding basis, Catalan number is " +
                 std::to_string(cn));

  if (n <= 5) {
    bool triangular = true;
    std::string witness;
    Rational largest(0);
    for (const Permutation& w : symmetric_group(n)) {
      NoncrossingPartition shape = excedance_class_of(w);
      Permutation head = min_permutation(shape);
      GroupAlgebraVector expansion = phi_expand(w);
      if (expansion.coefficient(head) != 1) {
        triangular = false;
        witness = "coefficient of " + perm_to_string(head) + " in " +
                  perm_to_string(w) + " is " +
                  to_string(expansion.coefficient(head));
        break;
      }
      for (const auto& [v, c] : expansion.terms()) {
        if (!is_integer(c)) {
          triangular = false;
          witness = "non-integer coefficient " + to_string(c) + " in " +
                    perm_to_string(w);
          break;
        }
        if (!class_leq(excedance_class_of(v), shape)) {
          triangular = false;
          witness = "support of " + perm_to_string(w) +
                    " escapes the dominated classes at " + perm_to_string(v);
          break;
        }
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > largest) largest = a;
      }
      if (!triangular) break;
    }
    report.add("unitriangular_integer_expansion", triangular,
               triangular ? "all " + std::to_string(symmetric_group(n).size()) +
                                " expansions, largest |coefficient| = " +
                                to_string(largest)
                          : witness);
  }
  return report;
}

VerifyReport verify_tl_basis(int n) {
  return verify_tl_basis(n, effective_cap(default_caps().partition));
}

VerifyReport verify_tl_sections(int n, uint64_t seed, int trials, int cap) {
  VerifyReport report;
  report.theorem = "tl-sections";
  report.n = n;
  report.params.emplace_back("seed", std::to_string(seed));
  report.params.emplace_back("trials", std::to_string(trials));

  std::vector<ExcedanceClass> classes = partition_into_classes(n, cap);

  if (n <= 4) {
    long product = 1;
    for (const ExcedanceClass& cls : classes) {
      product *= static_cast<long>(cls.members.size());
    }
    bool all_pass = true;
    std::string witness;
    std::vector<size_t> idx(classes.size(), 0);
    long checked = 0;
    for (;;) {
      std::vector<Permutation> section;
      for (size_t i = 0; i < classes.size(); ++i) {
        section.push_back(classes[i].members[idx[i]]);
      }
      if (!basis_check(section)) {
        all_pass = false;
        witness = "section #" + std::to_string(checked) + " is dependent";
        break;
      }
      ++checked;
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == classes[pos].members.size()) {
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
    report.add("exhaustive_sections", all_pass && checked == product,
               all_pass ? "all " + std::to_string(checked) + " of " +
                              std::to_string(product) + " sections are bases"
                        : witness);
  }

  if (n == 4) {
    std::vector<Permutation> fixed = displayed_section_4();
    bool one_per_class = true;
    std::vector<NoncrossingPartition> shapes;
    for (const Permutation& w : fixed) shapes.push_back(excedance_class_of(w));
    std::sort(shapes.begin(), shapes.end());
    for (size_t i = 0; i + 1 < shapes.size(); ++i) {
      if (shapes[i] == shapes[i + 1]) one_per_class = false;
    }
    bool ok = one_per_class && fixed.size() == classes.size() &&
              basis_check(fixed);
    report.add("displayed_section", ok,
               ok ? "the fixed fourteen-element section is a basis"
                  : "the fixed fourteen-element section fails");
  }

  if (trials > 0) {
    bool all_pass = true;
    std::string witness;
    for (int t = 0; t < trials; ++t) {
      auto [section, ok] = random_section_basis(n, seed + static_cast<uint64_t>(t), cap);
      if (!ok) {
        all_pass = false;
        witness = "seed " + std::to_string(seed + static_cast<uint64_t>(t)) +
                  " produced a dependent section";
        break;
      }
    }
    report.add("random_sections", all_pass,
               all_pass ? "all " + std::to_string(trials) +
                              " seeded sections are bases"
                        : witness);
  }
  return report;
}

VerifyReport verify_tl_sections(int n, uint64_t seed, int trials) {
  return verify_tl_sections(n, seed, trials,
                            effective_cap(default_caps().partition));
}

VerifyReport verify_vanishing(int n, int max_weight, int cap) {
  VerifyReport report;
  report.theorem = "vanishing";
  report.n = n;
  report.params.emplace_back("max-weight", std::to_string(max_weight));

  std::vector<Permutation> points = enumerate_qsv(n, cap);
  std::vector<Composition> compositions = compositions_up_to(max_weight);

  bool all_zero = true;
  std::string witness;
  long evaluations = 0;
  for (const Composition& alpha : compositions) {
    if (alpha.length() > n) continue;
    Polynomial p = vanishing_poly(alpha, n);
    for (const Permutation& sigma : points) {
      Rational value = evaluate_at_permutation(p, sigma);
      ++evaluations;
      if (value != 0) {
        all_zero = false;
        witness = "P_" + composition_text(alpha) + "(" +
                  perm_to_string(sigma) + ") = " + to_string(value);
        break;
      }
    }
    if (!all_zero) break;
  }
  report.add("distinguished_points_vanish", all_zero,
             all_zero ? std::to_string(evaluations) +
                            " evaluations, all exactly zero"
                      : witness);

  bool expansion_agrees = true;
  std::string expansion_witness;
  long expansions = 0;
  for (const Permutation& sigma : points) {
    if (nontrivial_cycle_count(sigma) > 1) continue;
    for (const Composition& alpha : compositions) {
      if (alpha.size() > 5) continue;  // expansion sweep budget
      Rational value(0);
      try {
        value = single_cycle_expansion(alpha, sigma);
      } catch (const std::logic_error& e) {
        expansion_agrees = false;
        expansion_witness = e.what();
        break;
      }
      ++expansions;
      if (value != 0) {
        expansion_agrees = false;
        expansion_witness = "expansion at " + perm_to_string(sigma) +
                            " for alpha=" + composition_text(alpha) + " is " +
                            to_string(value);
        break;
      }
    }
    if (!expansion_agrees) break;
  }
  report.add("single_cycle_expansion_agrees", expansion_agrees,
             expansion_agrees ? std::to_string(expansions) +
                                    " expansions, all zero and matching "
                                    "direct evaluation"
                              : expansion_witness);

  Rational control = evaluate_at_permutation(
      vanishing_poly(Composition({2, 1}), 3), Permutation({2, 3, 1}));
  report.add("negative_control", control == -2,
             "P_(2,1)(2,3,1) = " + to_string(control) +
                 ", expected -2: a point off the variety survives");
  return report;
}

VerifyReport verify_vanishing(int n, int max_weight) {
  return verify_vanishing(n, max_weight, effective_cap(default_caps().partition));
}

VerifyReport verify_ideal(int n, int max_degree, int cap) {
  VerifyReport report;
  report.theorem = "ideal";
  report.n = n;
  if (max_degree > 0) {
    report.params.emplace_back("max-degree", std::to_string(max_degree));
  }

  const TermOrder ord;
  try {
    VanishingReport cert = verify_theorem_vanishingQSV(n, cap, max_degree);
    report.add("vanishing_on_points", cert.vanishing_on_points,
               "every saturation generator kills every distinguished point");
    report.add("vanishing_dimension", cert.vanishing_dimension,
               "dimension " + std::to_string(cert.dimension) + " at degree " +
                   std::to_string(cert.vanishing_saturation_degree) +
                   ", Catalan number is " + std::to_string(cert.catalan));
    report.add("points_dimension", cert.points_dimension,
               "interpolation ideal has codimension " +
                   std::to_string(cert.dimension));
    report.add("leading_terms_match", cert.leading_terms_match,
               "saturation and interpolation share one leading-term ideal");
    report.add("qsym_monomials_match", cert.qsym_monomials_match,
               "quasisymmetric saturation at degree " +
                   std::to_string(cert.qsym_saturation_degree) +
                   " has the same standard monomials");
  } catch (const std::logic_error& e) {
    report.add("certificate", false, e.what());
    return report;
  }

  // leading-term invariance for each ideal the certificate instantiated
  auto [degree_p, basis_p] =
      saturate_vanishing_generators(n, ord, cap, max_degree);
  report.add("grin_vanishing_saturation",
             verify_grin(basis_p.generators, ord),
             "top components preserve the leading-term ideal (degree " +
                 std::to_string(degree_p) + " saturation)");

  auto [degree_m, basis_m] = saturate_qsym_generators(n, ord, cap, max_degree);
  report.add("grin_qsym_saturation", verify_grin(basis_m.generators, ord),
             "top components preserve the leading-term ideal (degree " +
                 std::to_string(degree_m) + " saturation)");

  std::vector<std::vector<Rational>> points;
  for (const Permutation& sigma : enumerate_qsv(n)) {
    std::vector<Rational> pt;
    for (int i = 1; i <= n; ++i) pt.emplace_back(sigma(i));
    points.push_back(std::move(pt));
  }
  IdealBasis point_basis = point_vanishing_ideal(points);
  report.add("grin_point_ideal", verify_grin(point_basis.generators, ord),
             "top components preserve the leading-term ideal (interpolation)");
  return report;
}

VerifyReport verify_ideal(int n, int max_degree) {
  return verify_ideal(n, max_degree, effective_cap(default_caps().groebner));
}

}  // namespace qsv
