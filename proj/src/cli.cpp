#include "qpa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "qpa/diagram.hpp"
#include "qpa/factorization.hpp"
#include "qpa/lincomb.hpp"
#include "qpa/parallel.hpp"
#include "qpa/quasi_partition.hpp"
#include "qpa/rep_theory.hpp"
#include "qpa/verify.hpp"

namespace qpa {

namespace {

/// Usage problems: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text grammar, or "@path" naming a JSON file with fields k and blocks.
Diagram read_diagram(const std::string& arg, int k) {
  Diagram d;
  try {
    if (!arg.empty() && arg[0] == '@') {
      std::ifstream in(arg.substr(1));
      if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
      d = diagram_from_json(nlohmann::json::parse(in));
    } else {
      d = parse_diagram(arg, k);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad diagram JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad diagram: ") + e.what());
  }
  if (d.k() != k) throw UsageError("diagram " + to_string(d) + " does not have k=" + std::to_string(k));
  return d;
}

void check_k(int k) {
  if (k < 1 || k > kMaxK) throw UsageError("k must lie in 1.." + std::to_string(kMaxK));
}

int cmd_dims(int k, std::ostream& out) {
  check_k(k);
  const std::string bell_value = bell(2 * k).get_str();
  std::string p_enum = "skipped (k > 6)";
  if (k <= 6) {
    std::size_t count = 0;
    enumerate_setpartitions(2 * k, [&](std::span<const std::uint8_t>) { ++count; });
    p_enum = std::to_string(count);
  }
  const DimensionCounts c = qp_dimension_counts(k);
  const std::string q_enum = c.enumerated.empty() ? "skipped (k > 6)" : c.enumerated;
  out << "k = " << k << "\n";
  out << "P dimension: bell = " << bell_value << ", enumeration = " << p_enum << "\n";
  out << "QP dimension: alternating = " << c.alternating << ", recurrence = " << c.recurrence
      << ", enumeration = " << q_enum << "\n";
  const bool ok = c.alternating == c.recurrence && (c.enumerated.empty() || c.enumerated == c.alternating) &&
                  (k > 6 || p_enum == bell_value);
  out << "agree: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_basis(int k, const std::string& algebra, bool json, std::ostream& out) {
  check_k(k);
  if (k > 6) throw UsageError("basis listing supports k <= 6");
  const auto basis = algebra == "P" ? enumerate_basis_P(k) : enumerate_basis_QP(k);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : basis) arr.push_back(to_json(d));
    out << arr.dump() << "\n";
  } else {
    for (const auto& d : basis) out << to_string(d) << "\n";
  }
  return 0;
}

int cmd_mul(int k, const std::string& algebra, const std::string& a, const std::string& b, std::ostream& out) {
  check_k(k);
  const Diagram d1 = read_diagram(a, k), d2 = read_diagram(b, k);
  if (algebra == "P") {
    out << to_string(p_multiply(LinComb::single(d1, BasisTag::P_diagram), LinComb::single(d2, BasisTag::P_diagram),
                                LoopParam::x))
        << "\n";
  } else {
    if (d1.has_isolated() || d2.has_isolated()) throw UsageError("QP basis diagrams have no singleton blocks");
    out << to_string(qp_multiply(d1, d2)) << "\n";
  }
  return 0;
}

int cmd_expand(int k, const std::string& a, std::ostream& out) {
  check_k(k);
  const Diagram d = read_diagram(a, k);
  if (d.has_isolated()) throw UsageError("bar of a diagram with a singleton block is zero");
  out << to_string(bar_expand(d)) << "\n";
  return 0;
}

int cmd_bratteli(int levels, const std::string& format, std::ostream& out) {
  if (levels < 0 || levels > 8) throw UsageError("levels must lie in 0..8");
  const BratteliGraph g = bratteli_graph(levels);
  if (format == "dot") out << bratteli_dot(g);
  else out << bratteli_json(g).dump(2) << "\n";
  return 0;
}

int cmd_irreps(int k, std::ostream& out) {
  if (k < 0 || k > 7) throw UsageError("k must lie in 0..7");
  out << "lambda\tformula\tpaths\ttableaux\tagree\n";
  bool all = true;
  for (int m = 0; m <= k; ++m)
    for (const auto& p : partitions_of(m)) {
      const BigInt f = irrep_dim_formula(p, k), paths = path_count(p, k);
      const std::size_t tabs = kron_tableaux(p, k).size();
      const bool ok = f == paths && paths == BigInt(static_cast<unsigned long>(tabs));
      all = all && ok;
      out << to_string(p) << "\t" << f.get_str() << "\t" << paths.get_str() << "\t" << tabs << "\t"
          << (ok ? "yes" : "no") << "\n";
    }
  return all ? 0 : 1;
}

int cmd_factor(int k, const std::string& a, std::ostream& out) {
  check_k(k);
  if (k > 6) throw UsageError("factor supports k <= 6");
  const Diagram d = read_diagram(a, k);
  if (d.has_isolated()) throw UsageError("only singleton-free diagrams factor over the generators");
  Factorizer f(k);
  const GenWord w = f.factor(d);
  const bool round_trip = evaluate_word(w).diagram == d;
  const bool suffix = suffixes_singleton_free(w);
  out << "word: " << (w.letters.empty() ? "(empty)" : to_string(w)) << "\n";
  out << "length: " << w.letters.size() << "\n";
  out << "evaluates to d: " << (round_trip ? "yes" : "no") << "\n";
  out << "suffixes singleton-free: " << (suffix ? "yes" : "no") << "\n";
  return round_trip && suffix ? 0 : 1;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names = {suite};
  bool all = true;
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, opt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (const auto& c : r.checks) {
      out << (c.pass ? "PASS " : c.informational ? "NOTE " : "FAIL ") << r.suite << ": " << c.name;
      if (!c.pass || !c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    out << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
    all = all && r.pass();
  }
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the quasi-partition algebra"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  unsigned threads = 0;
  std::string cache_dir;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "Directory for structure-table cache files");

  int k = 0, levels = 0, n = 0;
  std::string algebra = "QP", d1, d2, d, format = "dot", suite;
  bool json = false;
  const auto algebras = CLI::IsMember({"P", "QP"});

  auto* dims = app.add_subcommand("dims", "P and QP dimensions, closed forms against enumeration");
  dims->add_option("--k", k)->required();
  auto* basis = app.add_subcommand("basis", "List a diagram basis");
  basis->add_option("--k", k)->required();
  basis->add_option("--algebra", algebra)->check(algebras);
  basis->add_flag("--json", json);
  auto* mul = app.add_subcommand("mul", "Multiply two basis diagrams");
  mul->add_option("--k", k)->required();
  mul->add_option("--algebra", algebra)->check(algebras);
  mul->add_option("--d1", d1)->required();
  mul->add_option("--d2", d2)->required();
  auto* expand = app.add_subcommand("expand-bar", "Write a bar element in the bracket basis");
  expand->add_option("--k", k)->required();
  expand->add_option("--d", d)->required();
  auto* brat = app.add_subcommand("bratteli", "Emit the Bratteli diagram");
  brat->add_option("--levels", levels)->required();
  brat->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  auto* irreps = app.add_subcommand("irreps", "Irreducible dimensions three ways");
  irreps->add_option("--k", k)->required();
  auto* fac = app.add_subcommand("factor", "Factor a singleton-free diagram over the generators");
  fac->add_option("--k", k)->required();
  fac->add_option("--d", d)->required();
  auto* ver = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  ver->add_option("--k", k)->required();
  ver->add_option("--n", n, "Evaluation point for oracle checks (default 2k+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*dims) return cmd_dims(k, out);
    if (*basis) return cmd_basis(k, algebra, json, out);
    if (*mul) return cmd_mul(k, algebra, d1, d2, out);
    if (*expand) return cmd_expand(k, d, out);
    if (*brat) return cmd_bratteli(levels, format, out);
    if (*irreps) return cmd_irreps(k, out);
    if (*fac) return cmd_factor(k, d, out);
    if (*ver) {
      VerifyOptions opt{k, n, resolve_threads(threads), cache_dir};
      return cmd_verify(suite, opt, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qpa
