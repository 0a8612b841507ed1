#include "qsv/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qsv {

using OrderedJson = nlohmann::ordered_json;

namespace {

OrderedJson ncp_json_object(const NoncrossingPartition& lambda) {
  OrderedJson j;
  j["n"] = lambda.n();
  j["arcs"] = OrderedJson::array();
  for (const Arc& a : lambda.arcs()) {
    j["arcs"].push_back(OrderedJson::array({a.first, a.second}));
  }
  return j;
}

OrderedJson polynomial_json_object(const Polynomial& f) {
  OrderedJson j;
  j["n"] = f.n();
  j["terms"] = OrderedJson::array();
  for (const auto& [exp, coef] : f.terms()) {
    OrderedJson t;
    t["exp"] = exp;
    t["coef"] = to_string(coef);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

// Renders |c| * monomial, omitting factors of one; empty monomial means the
// constant term.
std::string magnitude_with_monomial(const Rational& c,
                                    const std::string& monomial) {
  Rational a = c < 0 ? Rational(-c) : c;
  if (monomial.empty()) return to_string(a);
  if (a == 1) return monomial;
  return to_string(a) + "*" + monomial;
}

std::string signed_sum(
    const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, body] = terms[i];
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

}  // namespace

std::string perm_to_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(w(i));
  }
  return out;
}

Permutation perm_from_string(const std::string& s) {
  std::vector<int> word;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry: \"" + item + "\"");
    }
    while (used < item.size() &&
           std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (used != item.size()) {
      throw std::invalid_argument("bad permutation entry: \"" + item + "\"");
    }
    word.push_back(value);
  }
  return Permutation(word);  // validates the rearrangement property
}

std::string cycle_string(const Permutation& w) {
  const int n = w.n();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::string out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle{start};
    seen[start] = true;
    for (int x = w(start); x != start; x = w(x)) {
      cycle.push_back(x);
      seen[x] = true;
    }
    // write the cycle from its largest element onward
    size_t top = 0;
    for (size_t i = 1; i < cycle.size(); ++i) {
      if (cycle[i] > cycle[top]) top = i;
    }
    out += "(";
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += " ";
      out += std::to_string(cycle[(top + i) % cycle.size()]);
    }
    out += ")";
  }
  return out;
}

std::string ncp_to_text(const NoncrossingPartition& lambda) {
  std::string out = "n=" + std::to_string(lambda.n()) + "; arcs=";
  for (size_t i = 0; i < lambda.arcs().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(lambda.arcs()[i].first) + "-" +
           std::to_string(lambda.arcs()[i].second);
  }
  return out;
}

std::string ncp_to_json(const NoncrossingPartition& lambda) {
  return ncp_json_object(lambda).dump();
}

std::string ballot_string(const BallotSequence& b) {
  std::string out;
  for (int x : b) {
    if (x != 1 && x != -1) throw std::invalid_argument("ballot entries are ±1");
    out += x == 1 ? '1' : '-';
  }
  return out;
}

std::string class_to_json(const ExcedanceClass& cls, bool include_members) {
  OrderedJson j;
  j["shape"] = ncp_json_object(cls.shape);
  j["size"] = cls.members.size();
  j["min"] = perm_to_string(cls.min_elt);
  j["max"] = perm_to_string(cls.max_elt);
  if (include_members) {
    j["members"] = OrderedJson::array();
    for (const Permutation& w : cls.members) {
      j["members"].push_back(perm_to_string(w));
    }
  }
  return j.dump();
}

std::string group_algebra_to_text(const GroupAlgebraVector& v) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [w, c] : v.terms()) {
    terms.emplace_back(c, magnitude_with_monomial(
                              c, "(" + perm_to_string(w) + ")"));
  }
  return signed_sum(terms);
}

std::string polynomial_to_text(const Polynomial& f) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [exp, c] : f.terms()) {
    std::string monomial;
    for (size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "x" + std::to_string(i + 1);
      if (exp[i] > 1) monomial += "^" + std::to_string(exp[i]);
    }
    terms.emplace_back(c, magnitude_with_monomial(c, monomial));
  }
  return signed_sum(terms);
}

std::string polynomial_to_json(const Polynomial& f) {
  return polynomial_json_object(f).dump();
}

std::string groebner_to_json(const IdealBasis& basis) {
  OrderedJson j;
  j["order"] = "grlex";
  std::string precedence;
  for (int i = 1; i <= basis.n; ++i) {
    if (i > 1) precedence += ">";
    precedence += "x" + std::to_string(i);
  }
  j["precedence"] = precedence;
  j["n"] = basis.n;
  j["generators"] = OrderedJson::array();
  const std::vector<Polynomial>& polys =
      basis.groebner ? *basis.groebner : basis.generators;
  for (const Polynomial& g : polys) {
    j["generators"].push_back(polynomial_json_object(g));
  }
  return j.dump();
}

std::vector<Polynomial> polynomials_from_json(const std::string& text) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer()) {
    throw std::invalid_argument("expected an object with an integer \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) throw std::invalid_argument("\"n\" must be at least 1");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw std::invalid_argument("expected a \"generators\" array");
  }
  std::vector<Polynomial> out;
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_object() || !gen.contains("terms") ||
        !gen["terms"].is_array()) {
      throw std::invalid_argument("each generator needs a \"terms\" array");
    }
    if (gen.contains("n") &&
        (!gen["n"].is_number_integer() || gen["n"].get<int>() != n)) {
      throw std::invalid_argument("generator \"n\" disagrees with the top level");
    }
    Polynomial f(n);
    for (const auto& term : gen["terms"]) {
      if (!term.is_object() || !term.contains("exp") ||
          !term["exp"].is_array() || !term.contains("coef")) {
        throw std::invalid_argument(
            "each term needs an \"exp\" array and a \"coef\"");
      }
      std::vector<int> exp;
      for (const auto& e : term["exp"]) {
        if (!e.is_number_integer() || e.get<int>() < 0) {
          throw std::invalid_argument("exponents must be nonnegative integers");
        }
        exp.push_back(e.get<int>());
      }
      Rational coef;
      if (term["coef"].is_string()) {
        coef = rational_from_string(term["coef"].get<std::string>());
      } else if (term["coef"].is_number_integer()) {
        coef = Rational(term["coef"].get<long>());
      } else {
        throw std::invalid_argument("\"coef\" must be a string or an integer");
      }
      f.add_term(exp, coef);  // validates the width against n
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<int, int>> covers_from_leq(
    const std::vector<std::vector<bool>>& leq) {
  const size_t m = leq.size();
  std::vector<std::pair<int, int>> covers;
  for (size_t a = 0; a < m; ++a) {
    if (leq[a].size() != m) throw std::invalid_argument("leq is not square");
    for (size_t b = 0; b < m; ++b) {
      if (a == b || !leq[a][b]) continue;
      if (leq[b][a]) throw std::invalid_argument("leq is not antisymmetric");
      bool strictly_between = false;
      for (size_t c = 0; c < m && !strictly_between; ++c) {
        if (c != a && c != b && leq[a][c] && leq[c][b]) {
          strictly_between = true;
        }
      }
      if (!strictly_between) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::string hasse_dot(const HasseGraph& graph) {
  if (graph.labels.size() != graph.ranks.size()) {
    throw std::invalid_argument("labels and ranks differ in length");
  }
  const int m = static_cast<int>(graph.labels.size());
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < m; ++i) {
    out += "  " + std::to_string(i) + " [label=\"" + graph.labels[i] + "\"];\n";
  }
  std::vector<std::pair<int, int>> edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  }
  std::map<int, std::vector<int>> by_rank;
  for (int i = 0; i < m; ++i) by_rank[graph.ranks[i]].push_back(i);
  for (const auto& [rank, nodes] : by_rank) {
    out += "  { rank=same;";
    for (int i : nodes) out += " " + std::to_string(i) + ";";
    out += " }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace qsv
