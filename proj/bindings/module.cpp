// Python surface of the library.  Deliberately string-first: permutations
// travel as comma-form words, reports and polynomials as the same JSON the
// command-line tool prints, so the bindings exercise exactly the public
// renderings rather than a parallel object model.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qsv/classes.hpp"
#include "qsv/groebner.hpp"
#include "qsv/io.hpp"
#include "qsv/ncp.hpp"
#include "qsv/perm.hpp"
#include "qsv/qpoly.hpp"
#include "qsv/tl.hpp"
#include "qsv/verify.hpp"

namespace py = pybind11;
using namespace qsv;

namespace {

Composition composition_from_csv(const std::string& text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    parts.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Composition(parts);
}

}  // namespace

PYBIND11_MODULE(_qsvcore, m) {
  m.doc() =
      "exact combinatorics of noncrossing partitions, distinguished "
      "permutations, and the algebras they span";

  m.def(
      "enumerate_qsv",
      [](int n) {
        std::vector<std::string> out;
        for (const Permutation& w : enumerate_qsv(n)) {
          out.push_back(perm_to_string(w));
        }
        return out;
      },
      py::arg("n"),
      "comma-form words of the distinguished permutations, sorted");

  m.def(
      "enumerate_ncp",
      [](int n) {
        std::vector<std::string> out;
        for (const NoncrossingPartition& lambda : enumerate_ncp(n)) {
          out.push_back(ncp_to_text(lambda));
        }
        return out;
      },
      py::arg("n"), "text forms of the noncrossing partition diagrams");

  m.def(
      "classes",
      [](int n, bool members) {
        std::vector<std::string> out;
        for (const ExcedanceClass& cls : partition_into_classes(n)) {
          out.push_back(class_to_json(cls, members));
        }
        return out;
      },
      py::arg("n"), py::arg("members") = false,
      "JSON documents of the excedance classes, sorted by shape");

  m.def(
      "cycle_form",
      [](const std::string& perm) {
        return cycle_string(perm_from_string(perm));
      },
      py::arg("perm"), "cycle rendering of a comma-form permutation");

  m.def(
      "normal_form",
      [](const std::string& perm) {
        return group_algebra_to_text(
            normal_form(GroupAlgebraVector::unit(perm_from_string(perm))));
      },
      py::arg("perm"),
      "signed avoiding-basis expansion of a comma-form permutation");

  m.def(
      "basis_check",
      [](const std::vector<std::string>& perms) {
        std::vector<Permutation> parsed;
        parsed.reserve(perms.size());
        for (const std::string& p : perms) {
          parsed.push_back(perm_from_string(p));
        }
        return basis_check(parsed);
      },
      py::arg("perms"),
      "whether the expansions of these permutations form a basis");

  m.def(
      "palpha",
      [](const std::string& alpha, int n) {
        return polynomial_to_text(vanishing_poly(composition_from_csv(alpha), n));
      },
      py::arg("alpha"), py::arg("n"),
      "text form of the vanishing polynomial of a composition");

  m.def(
      "palpha_json",
      [](const std::string& alpha, int n) {
        return polynomial_to_json(vanishing_poly(composition_from_csv(alpha), n));
      },
      py::arg("alpha"), py::arg("n"),
      "JSON form of the vanishing polynomial of a composition");

  m.def(
      "palpha_eval",
      [](const std::string& alpha, int n, const std::string& perm) {
        return to_string(evaluate_at_permutation(
            vanishing_poly(composition_from_csv(alpha), n),
            perm_from_string(perm)));
      },
      py::arg("alpha"), py::arg("n"), py::arg("perm"),
      "exact rational value of the vanishing polynomial at a permutation");

  m.def(
      "verify",
      [](const std::string& theorem, int n, uint64_t seed, int trials,
         int max_degree) {
        VerifyReport report;
        if (theorem == "interval") {
          report = verify_interval(n);
        } else if (theorem == "quotient-order") {
          report = verify_quotient_order(n);
        } else if (theorem == "tl-basis") {
          report = verify_tl_basis(n);
        } else if (theorem == "tl-sections") {
          report = verify_tl_sections(n, seed, trials);
        } else if (theorem == "vanishing") {
          report = verify_vanishing(n, max_degree > 0 ? max_degree : 6);
        } else if (theorem == "ideal") {
          report = verify_ideal(n, max_degree);
        } else {
          throw std::invalid_argument("unknown theorem: " + theorem);
        }
        return report_to_json(report);
      },
      py::arg("theorem"), py::arg("n"), py::arg("seed") = 0,
      py::arg("trials") = 50, py::arg("max_degree") = -1,
      "JSON verification report for one of: interval, quotient-order, "
      "tl-basis, tl-sections, vanishing, ideal");

  m.def(
      "hasse_dot",
      [](const std::string& kind, int n) {
        HasseGraph graph;
        std::vector<std::vector<bool>> leq;
        if (kind == "qsv") {
          std::vector<Permutation> nodes = enumerate_qsv(n);
          const size_t m2 = nodes.size();
          leq.assign(m2, std::vector<bool>(m2, false));
          for (size_t i = 0; i < m2; ++i) {
            graph.labels.push_back(perm_to_string(nodes[i]));
            graph.ranks.push_back(length(nodes[i]));
            for (size_t j = 0; j < m2; ++j) {
              leq[i][j] = bruhat_leq(nodes[i], nodes[j]);
            }
          }
        } else if (kind == "ncp") {
          std::vector<NoncrossingPartition> nodes = enumerate_ncp(n);
          const size_t m2 = nodes.size();
          leq.assign(m2, std::vector<bool>(m2, false));
          for (size_t i = 0; i < m2; ++i) {
            graph.labels.push_back(ballot_string(ballot_sequence(nodes[i])));
            graph.ranks.push_back(static_cast<int>(nodes[i].arcs().size()));
            for (size_t j = 0; j < m2; ++j) {
              leq[i][j] = ncp_leq(nodes[i], nodes[j]);
            }
          }
        } else {
          throw std::invalid_argument("unknown kind: " + kind);
        }
        graph.edges = covers_from_leq(leq);
        return hasse_dot(graph);
      },
      py::arg("kind"), py::arg("n"),
      "DOT text of the Hasse diagram (kinds: qsv, ncp)");
}
