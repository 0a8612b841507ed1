// Command-line front end: enumeration, Hasse-diagram export, theorem
// verification, group-algebra reduction, vanishing polynomials, and
// Groebner-basis runs.  JSON is the canonical machine format, text forms
// are derived from it, DOT is used for diagrams.  Exit codes: 0 all checks
// pass, 1 a mathematical check failed (with witness), 2 usage or cap error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsv/classes.hpp"
#include "qsv/config.hpp"
#include "qsv/groebner.hpp"
#include "qsv/io.hpp"
#include "qsv/ncp.hpp"
#include "qsv/perm.hpp"
#include "qsv/qpoly.hpp"
#include "qsv/tl.hpp"
#include "qsv/verify.hpp"

namespace {

using namespace qsv;
using OrderedJson = nlohmann::ordered_json;

struct CommonOpts {
  std::string out;
  std::string format;
  int cap = 0;  // 0 = subsystem default (QSV_CAP_OVERRIDE still applies)
};

void add_common(CLI::App* sub, CommonOpts* opts,
                const std::string& default_format,
                const std::vector<std::string>& formats) {
  opts->format = default_format;
  sub->add_option("--out", opts->out, "write the output to this file");
  if (!formats.empty()) {
    sub->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember(formats));
  }
  sub->add_option("--cap-bruteforce", opts->cap,
                  "raise the brute-force size cap for this invocation")
      ->check(CLI::PositiveNumber);
}

int emit(const std::string& text, const CommonOpts& opts) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (opts.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open " + opts.out);
    file << body;
  }
  return 0;
}

void require_cap(int n, int cap, const std::string& what) {
  if (n > cap) {
    throw std::invalid_argument(what + ": n=" + std::to_string(n) +
                                " exceeds the brute-force cap " +
                                std::to_string(cap));
  }
}

// ---------------------------------------------------------------- enumerate

int run_enumerate(const std::string& kind, int n, bool members,
                  const CommonOpts& opts) {
  const Caps caps = default_caps();
  std::vector<std::string> lines;       // text items
  std::vector<OrderedJson> items;       // json items

  if (kind == "ncp") {
    std::vector<NoncrossingPartition> all =
        opts.cap ? enumerate_ncp(n, opts.cap) : enumerate_ncp(n);
    for (const NoncrossingPartition& lambda : all) {
      lines.push_back(ncp_to_text(lambda));
      items.push_back(OrderedJson::parse(ncp_to_json(lambda)));
    }
  } else if (kind == "qsv") {
    std::vector<Permutation> all =
        opts.cap ? enumerate_qsv(n, opts.cap) : enumerate_qsv(n);
    for (const Permutation& w : all) {
      lines.push_back(perm_to_string(w));
      items.emplace_back(perm_to_string(w));
    }
  } else if (kind == "avoiders") {
    require_cap(n, opts.cap ? opts.cap : effective_cap(caps.partition),
                "enumerate avoiders");
    for (const Permutation& w : symmetric_group(n)) {
      if (!is_321_avoiding(w)) continue;
      lines.push_back(perm_to_string(w));
      items.emplace_back(perm_to_string(w));
    }
  } else {  // classes
    std::vector<ExcedanceClass> all = opts.cap
                                          ? partition_into_classes(n, opts.cap)
                                          : partition_into_classes(n);
    for (const ExcedanceClass& cls : all) {
      std::string arcs = ncp_to_text(cls.shape);
      lines.push_back(arcs + "; size=" + std::to_string(cls.members.size()) +
                      "; min=" + perm_to_string(cls.min_elt) +
                      "; max=" + perm_to_string(cls.max_elt));
      items.push_back(OrderedJson::parse(class_to_json(cls, members)));
    }
  }

  if (opts.format == "json") {
    OrderedJson doc;
    doc["kind"] = kind;
    doc["n"] = n;
    doc["count"] = items.size();
    doc["items"] = std::move(items);
    return emit(doc.dump(2), opts);
  }
  std::string text = "count=" + std::to_string(lines.size()) + "\n";
  for (const std::string& line : lines) text += line + "\n";
  return emit(text, opts);
}

// -------------------------------------------------------------------- hasse

int run_hasse(const std::string& kind, int n, const CommonOpts& opts) {
  const int cap = opts.cap ? opts.cap : effective_cap(default_caps().hasse);
  require_cap(n, cap, "hasse " + kind);

  HasseGraph graph;
  std::vector<std::vector<bool>> leq;

  if (kind == "qsv") {
    std::vector<Permutation> nodes = enumerate_qsv(n);
    const size_t m = nodes.size();
    leq.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
      graph.labels.push_back(perm_to_string(nodes[i]));
      graph.ranks.push_back(length(nodes[i]));
      for (size_t j = 0; j < m; ++j) leq[i][j] = bruhat_leq(nodes[i], nodes[j]);
    }
  } else if (kind == "ncp") {
    std::vector<NoncrossingPartition> nodes = enumerate_ncp(n);
    const size_t m = nodes.size();
    leq.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
      graph.labels.push_back(ballot_string(ballot_sequence(nodes[i])));
      graph.ranks.push_back(static_cast<int>(nodes[i].arcs().size()));
      for (size_t j = 0; j < m; ++j) leq[i][j] = ncp_leq(nodes[i], nodes[j]);
    }
  } else {  // quotient: the induced order, computed from member pairs
    std::vector<ExcedanceClass> classes = partition_into_classes(n);
    const size_t m = classes.size();
    leq.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
      graph.labels.push_back(ballot_string(ballot_sequence(classes[i].shape)));
      graph.ranks.push_back(
          static_cast<int>(classes[i].shape.arcs().size()));
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
        leq[i][j] = found;
      }
    }
  }

  graph.edges = covers_from_leq(leq);
  return emit(hasse_dot(graph), opts);
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& theorem, int n, uint64_t seed, int trials,
               int max_degree, const CommonOpts& opts) {
  VerifyReport report;
  if (theorem == "interval") {
    report = opts.cap ? verify_interval(n, opts.cap) : verify_interval(n);
  } else if (theorem == "quotient-order") {
    report = opts.cap ? verify_quotient_order(n, opts.cap)
                      : verify_quotient_order(n);
  } else if (theorem == "tl-basis") {
    report = opts.cap ? verify_tl_basis(n, opts.cap) : verify_tl_basis(n);
  } else if (theorem == "tl-sections") {
    report = opts.cap ? verify_tl_sections(n, seed, trials, opts.cap)
                      : verify_tl_sections(n, seed, trials);
  } else if (theorem == "vanishing") {
    const int weight = max_degree > 0 ? max_degree : 6;
    report = opts.cap ? verify_vanishing(n, weight, opts.cap)
                      : verify_vanishing(n, weight);
  } else {  // ideal
    report = opts.cap ? verify_ideal(n, max_degree, opts.cap)
                      : verify_ideal(n, max_degree);
  }
  emit(opts.format == "text" ? report_to_text(report)
                             : report_to_json(report),
       opts);
  return report.pass() ? 0 : 1;
}

// ----------------------------------------------------------------------- tl

int run_tl_reduce(int n, const std::string& perm, const CommonOpts& opts) {
  Permutation w = perm_from_string(perm);
  if (n != 0 && w.n() != n) {
    throw std::invalid_argument("--perm has " + std::to_string(w.n()) +
                                " entries but --n is " + std::to_string(n));
  }
  GroupAlgebraVector nf = normal_form(GroupAlgebraVector::unit(w));
  if (opts.format == "json") {
    OrderedJson doc;
    doc["n"] = w.n();
    doc["input"] = perm_to_string(w);
    doc["normal_form"] = OrderedJson::array();
    for (const auto& [v, c] : nf.terms()) {
      OrderedJson term;
      term["perm"] = perm_to_string(v);
      term["coef"] = to_string(c);
      doc["normal_form"].push_back(std::move(term));
    }
    return emit(doc.dump(2), opts);
  }
  return emit(group_algebra_to_text(nf), opts);
}

int run_tl_basis_check(int n, const std::string& path,
                       const CommonOpts& opts) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read " + path);
  std::vector<Permutation> perms;
  std::string line;
  while (std::getline(file, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    Permutation w = perm_from_string(line);
    if (n != 0 && w.n() != n) {
      throw std::invalid_argument("line \"" + line + "\" has " +
                                  std::to_string(w.n()) +
                                  " entries but --n is " + std::to_string(n));
    }
    perms.push_back(std::move(w));
  }
  if (perms.empty()) throw std::invalid_argument("no permutations in " + path);

  BasisReport report = basis_check_witness(perms);
  std::string text = report.independent_full_rank ? "true" : "false";
  if (!report.independent_full_rank && report.witness) {
    std::vector<std::pair<Rational, std::string>> terms;
    std::string rendered;
    for (size_t i = 0; i < perms.size(); ++i) {
      const Rational& c = (*report.witness)[i];
      if (c == 0) continue;
      if (!rendered.empty()) rendered += c < 0 ? " - " : " + ";
      else if (c < 0) rendered += "-";
      Rational a = c < 0 ? Rational(-c) : c;
      if (a != 1) rendered += to_string(a) + "*";
      rendered += "(" + perm_to_string(perms[i]) + ")";
    }
    text += "\nwitness: " + rendered + " reduces to zero";
  }
  emit(text, opts);
  return report.independent_full_rank ? 0 : 1;
}

// --------------------------------------------------------------------- poly

int run_poly_palpha(const std::string& alpha_text, int n,
                    const std::string& eval, const CommonOpts& opts) {
  std::vector<int> parts;
  std::stringstream in(alpha_text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(std::stoi(item));
  Composition alpha(parts);

  Polynomial p = vanishing_poly(alpha, n);
  if (!eval.empty()) {
    Permutation sigma = perm_from_string(eval);
    Rational value = evaluate_at_permutation(p, sigma);
    if (opts.format == "json") {
      OrderedJson doc;
      doc["alpha"] = alpha_text;
      doc["n"] = n;
      doc["point"] = perm_to_string(sigma);
      doc["value"] = to_string(value);
      return emit(doc.dump(2), opts);
    }
    return emit(to_string(value), opts);
  }
  if (opts.format == "json") return emit(polynomial_to_json(p), opts);
  return emit(polynomial_to_text(p), opts);
}

// -------------------------------------------------------------------- ideal

int run_ideal_verify(int n, int max_degree, bool json, const CommonOpts& opts) {
  VerifyReport report = opts.cap ? verify_ideal(n, max_degree, opts.cap)
                                 : verify_ideal(n, max_degree);
  emit(json ? report_to_json(report) : report_to_text(report), opts);
  return report.pass() ? 0 : 1;
}

int run_ideal_gb(const std::string& path, const CommonOpts& opts) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::vector<Polynomial> gens = polynomials_from_json(buffer.str());

  IdealBasis basis;
  basis.n = gens.front().n();
  basis.generators = gens;
  const TermOrder ord;
  basis.groebner = buchberger(gens, ord);
  return emit(groebner_to_json(basis), opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact combinatorics of noncrossing partitions, distinguished "
      "permutations, and the algebras they span"};
  app.require_subcommand(1);

  int rc = 0;

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "list diagrams, permutations, or excedance classes");
  std::string enum_kind;
  int enum_n = 0;
  bool enum_members = false;
  CommonOpts enum_opts;
  enumerate->add_option("kind", enum_kind, "what to list")
      ->required()
      ->check(CLI::IsMember({"ncp", "qsv", "avoiders", "classes"}));
  enumerate->add_option("--n", enum_n, "size")->required();
  enumerate->add_flag("--members", enum_members,
                      "include class members (classes only)");
  add_common(enumerate, &enum_opts, "text", {"json", "text"});
  enumerate->callback(
      [&] { rc = run_enumerate(enum_kind, enum_n, enum_members, enum_opts); });

  // hasse
  auto* hasse = app.add_subcommand(
      "hasse", "DOT drawing of a Hasse diagram (covers only)");
  std::string hasse_kind;
  int hasse_n = 0;
  CommonOpts hasse_opts;
  hasse->add_option("kind", hasse_kind, "which order")
      ->required()
      ->check(CLI::IsMember({"qsv", "ncp", "quotient"}));
  hasse->add_option("--n", hasse_n, "size")->required();
  add_common(hasse, &hasse_opts, "dot", {"dot"});
  hasse->callback([&] { rc = run_hasse(hasse_kind, hasse_n, hasse_opts); });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "re-derive a theorem at a given size and report sub-checks");
  std::string verify_theorem;
  int verify_n = 0;
  uint64_t verify_seed = 0;
  int verify_trials = 500;
  int verify_max_degree = -1;
  CommonOpts verify_opts;
  verify->add_option("theorem", verify_theorem, "which statement")
      ->required()
      ->check(CLI::IsMember({"interval", "quotient-order", "tl-basis",
                             "tl-sections", "vanishing", "ideal"}));
  verify->add_option("--n", verify_n, "size")->required();
  verify->add_option("--seed", verify_seed, "seed for random sections");
  verify->add_option("--trials", verify_trials,
                     "number of seeded random sections");
  verify->add_option("--max-degree", verify_max_degree,
                     "saturation degree bound (ideal) or weight bound "
                     "(vanishing)");
  add_common(verify, &verify_opts, "json", {"json", "text"});
  verify->callback([&] {
    rc = run_verify(verify_theorem, verify_n, verify_seed, verify_trials,
                    verify_max_degree, verify_opts);
  });

  // tl
  auto* tl = app.add_subcommand("tl", "group-algebra rewriting");
  tl->require_subcommand(1);
  auto* tl_reduce = tl->add_subcommand(
      "reduce", "normal form of a permutation as a signed avoiding sum");
  int tl_n = 0;
  std::string tl_perm;
  CommonOpts tl_reduce_opts;
  tl_reduce->add_option("--n", tl_n, "size (checked against --perm)");
  tl_reduce->add_option("--perm", tl_perm, "comma-form permutation")
      ->required();
  add_common(tl_reduce, &tl_reduce_opts, "text", {"json", "text"});
  tl_reduce->callback(
      [&] { rc = run_tl_reduce(tl_n, tl_perm, tl_reduce_opts); });

  auto* tl_basis = tl->add_subcommand(
      "basis-check", "is a list of permutations a basis modulo the kernel?");
  int tl_basis_n = 0;
  std::string tl_basis_file;
  CommonOpts tl_basis_opts;
  tl_basis->add_option("--n", tl_basis_n, "size (checked against the file)");
  tl_basis->add_option("--file", tl_basis_file,
                       "one comma-form permutation per line")
      ->required();
  add_common(tl_basis, &tl_basis_opts, "text", {});
  tl_basis->callback(
      [&] { rc = run_tl_basis_check(tl_basis_n, tl_basis_file, tl_basis_opts); });

  // poly
  auto* poly = app.add_subcommand("poly", "vanishing polynomials");
  poly->require_subcommand(1);
  auto* palpha = poly->add_subcommand(
      "palpha", "expand or evaluate the vanishing polynomial of a composition");
  std::string palpha_alpha;
  int palpha_n = 0;
  std::string palpha_eval;
  CommonOpts palpha_opts;
  palpha->add_option("--alpha", palpha_alpha, "composition, e.g. 1,2,1")
      ->required();
  palpha->add_option("--n", palpha_n, "number of variables")->required();
  palpha->add_option("--eval", palpha_eval,
                     "evaluate at this comma-form permutation");
  add_common(palpha, &palpha_opts, "text", {"json", "text"});
  palpha->callback([&] {
    rc = run_poly_palpha(palpha_alpha, palpha_n, palpha_eval, palpha_opts);
  });

  // ideal
  auto* ideal = app.add_subcommand("ideal", "Groebner-basis runs");
  ideal->require_subcommand(1);
  auto* ideal_verify = ideal->add_subcommand(
      "verify", "the vanishing-ideal certificate at size n");
  int ideal_n = 0;
  int ideal_max_degree = -1;
  bool ideal_json = false;
  CommonOpts ideal_verify_opts;
  ideal_verify->add_option("--n", ideal_n, "size")->required();
  ideal_verify->add_option("--max-degree", ideal_max_degree,
                           "saturation degree bound");
  ideal_verify->add_flag("--json", ideal_json, "emit the JSON report");
  add_common(ideal_verify, &ideal_verify_opts, "text", {});
  ideal_verify->callback([&] {
    rc = run_ideal_verify(ideal_n, ideal_max_degree, ideal_json,
                          ideal_verify_opts);
  });

  auto* ideal_gb = ideal->add_subcommand(
      "gb", "reduced Groebner basis of the generators in a JSON file");
  std::string ideal_gens;
  CommonOpts ideal_gb_opts;
  ideal_gb->add_option("--gens", ideal_gens, "generator file")->required();
  add_common(ideal_gb, &ideal_gb_opts, "json", {"json"});
  ideal_gb->callback([&] { rc = run_ideal_gb(ideal_gens, ideal_gb_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
