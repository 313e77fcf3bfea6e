// octoclass: classify 8-dimensional metric hypercomplex algebras by the
// eigenvalue signature of their controlling spin-tensor.

#include "octoclass/algebra.hpp"
#include "octoclass/classify.hpp"
#include "octoclass/spinor.hpp"
#include "octoclass/stabilizer.hpp"
#include "octoclass/theta.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace octoclass;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inputs for one subcommand: file paths (positional) first, then builtins.
struct InputSpec {
  std::vector<std::string> files;
  std::vector<std::string> builtins;

  std::vector<MultiplicationTable> load() const {
    std::vector<MultiplicationTable> tables;
    for (const auto& f : files) tables.push_back(parse_table(read_file(f), f));
    for (const auto& b : builtins) tables.push_back(builtin(b));
    return tables;
  }
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("table", in.files, "multiplication table file(s)");
  cmd->add_option("--builtin", in.builtins, "built-in table name (repeatable)")
      ->check(CLI::IsMember(builtin_names()));
}

MultiplicationTable single_input(const InputSpec& in) {
  auto tables = in.load();
  if (tables.size() != 1)
    throw ParseError("expected exactly one input table, got " + std::to_string(tables.size()));
  return tables.front();
}

class Report {
 public:
  explicit Report(const std::string& path) : path_(path) {}

  void add(const std::string& key, const std::string& value) {
    lines_.push_back(key + "=" + value);
  }
  void add(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    add(key, std::string(buf));
  }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }

  void write() const {
    if (path_.empty()) return;
    std::ofstream out(path_);
    if (!out) throw ParseError("cannot write report file: " + path_);
    for (const auto& l : lines_) out << l << '\n';
  }

 private:
  std::string path_;
  std::vector<std::string> lines_;
};

void print_theta(const Mat8& th) {
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) std::printf("%9.4f%s", th(r, c), c == 7 ? "" : " ");
    std::printf("\n");
  }
}

void report_eigenvalues(Report& rep, const std::vector<double>& evs, const std::string& prefix) {
  for (size_t k = 0; k < evs.size(); ++k) rep.add(prefix + std::to_string(k), evs[k]);
}

int cmd_theta(const InputSpec& in, double tol, Report& rep) {
  const ThetaTensor th = theta_of_table(single_input(in), tol);
  print_theta(th.mat);
  for (int c = 0; c < 8; ++c)
    for (int d = 0; d < 8; ++d)
      rep.add("theta." + std::to_string(c) + "." + std::to_string(d), th.mat(c, d));
  return 0;
}

int cmd_eigen(const InputSpec& in, double tol, Report& rep) {
  const Signature sig = signature(single_input(in), tol);
  for (size_t k = 0; k < sig.eigenvalues.size(); ++k)
    std::printf("%s%.12g", k ? " " : "", sig.eigenvalues[k]);
  std::printf("\n");
  report_eigenvalues(rep, sig.eigenvalues, "eigenvalue.");
  return 0;
}

void print_signature(const Signature& s) {
  std::printf("%s: identity=%s eigenvalues =", s.source.c_str(), s.has_identity ? "yes" : "no");
  for (double v : s.eigenvalues) std::printf(" %.12g", v);
  std::printf("\n");
}

int cmd_classify(const InputSpec& in, double tol, Report& rep) {
  auto tables = in.load();
  if (tables.size() != 2)
    throw ParseError("classify expects exactly two input tables, got " +
                     std::to_string(tables.size()));
  const ClassificationReport r = compare(tables[0], tables[1], tol);
  print_signature(r.left);
  print_signature(r.right);
  const bool iso = r.verdict == Verdict::Isomorphic;
  std::printf("verdict: %s (max eigenvalue deviation %.3g)\n",
              iso ? "isomorphic" : "not-isomorphic", r.max_deviation);
  rep.add("verdict", std::string(iso ? "isomorphic" : "not-isomorphic"));
  report_eigenvalues(rep, r.left.eigenvalues, "eigenvalue.");
  return iso ? 0 : 3;
}

int cmd_autdim(const InputSpec& in, double tol, Report& rep) {
  const StabilizerResult res = stabilizer_dimension(single_input(in), tol);
  std::printf("rank.identity=%d\n", res.rank_identity);
  std::printf("rank.theta=%d\n", res.rank_theta);
  std::printf("rank.combined=%d\n", res.rank_combined);
  std::printf("dimension=%d\n", res.dimension);
  for (const ConstraintRow& row : res.system.rows)
    std::printf("%s\n", format_constraint(row.coeffs).c_str());
  rep.add("rank.identity", res.rank_identity);
  rep.add("rank.theta", res.rank_theta);
  rep.add("rank.combined", res.rank_combined);
  rep.add("dimension", res.dimension);
  return 0;
}

int cmd_roundtrip(const InputSpec& in, double tol, Report& rep) {
  const MultiplicationTable t = single_input(in);
  const StructuralConstants full = to_structural_constants(t);
  const ThetaTensor th = theta_of_table(t, tol);
  const StructuralConstants rec = reconstruct_constants(th, new_basis_operators(), tol);
  const double dev = full.max_abs_diff(rec);
  std::printf("max roundtrip deviation: %.3g\n", dev);
  rep.add("max_deviation", dev);
  return 0;
}

int cmd_check(const InputSpec& in, double tol, Report& rep) {
  const MultiplicationTable t = single_input(in);
  const AxiomReport ax = check_axioms(t, tol);
  std::printf("axiom violations: %zu\n", ax.violations.size());
  for (const AxiomViolation& v : ax.violations)
    std::printf("  %s triple (e%d,e%d,e%d) residual %.3g\n",
                v.kind == AxiomViolation::Kind::AlternativeElastic ? "alternative" : "elastic",
                v.a, v.b, v.c, v.residual);
  bool metric_ok = true;
  double metric_dev = 0.0;
  if (t.has_identity) {
    const StructuralConstants c = to_structural_constants(t);
    for (int i = 0; i < 8 && metric_ok; ++i)
      for (int j = 0; j < 8 && metric_ok; ++j) {
        AlgebraElement a = AlgebraElement::Zero(), b = AlgebraElement::Zero();
        a(i) = 1.0;
        b(j) = 1.0;
        try {
          const double g = inner_product(a, b, c, tol);
          metric_dev = std::max(metric_dev, std::abs(g - (i == j ? 1.0 : 0.0)));
        } catch (const ConsistencyError&) {
          metric_ok = false;
        }
      }
    metric_ok = metric_ok && metric_dev <= 1e-9;
    std::printf("orthonormal metric: %s (max deviation %.3g)\n", metric_ok ? "yes" : "no",
                metric_dev);
  } else {
    std::printf("orthonormal metric: skipped (no identity element)\n");
  }
  rep.add("axiom_violations", static_cast<int>(ax.violations.size()));
  rep.add("metric_ok", std::string(metric_ok ? "1" : "0"));
  return 0;
}

int cmd_selftest(double tol, Report& rep) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, double value) {
    std::printf("%-34s %s (%.3g)\n", name.c_str(), ok ? "ok" : "FAIL", value);
    rep.add("selftest." + name, std::string(ok ? "ok" : "fail"));
    if (!ok) ++failures;
  };

  const double clifford = clifford_diagnostic(new_basis_operators());
  check("clifford.residual", clifford < 1e-9, clifford);

  const BasisChange u = standard_basis_change();
  const Mat8c eps = u.mat * old_basis_metric().mat * u.mat.transpose();
  const double eps_dev = (eps - Mat8c::Identity()).cwiseAbs().maxCoeff();
  check("metric.transforms_to_identity", eps_dev < 1e-12, eps_dev);

  for (const std::string& name : builtin_names()) {
    const ThetaTensor th = theta_of_table(builtin(name), tol);
    const double asym = (th.mat - th.mat.transpose()).cwiseAbs().maxCoeff();
    check("theta.symmetry." + name, asym < 1e-9, asym);
  }
  std::printf("selftest: %s\n", failures ? "FAIL" : "all checks passed");
  return failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of 8-dimensional metric hypercomplex algebras "
               "via the controlling spin-tensor"};
  app.require_subcommand(1);

  double tol = kDefaultTol;
  std::string report_path;
  app.add_option("--tol", tol, "numerical tolerance")->capture_default_str();
  app.add_option("--report", report_path, "write machine-readable key=value report to this path");

  std::ostringstream builtin_help;
  builtin_help << "Built-in tables:";
  for (const auto& n : builtin_names()) builtin_help << ' ' << n;
  app.footer(builtin_help.str());

  InputSpec in_theta, in_eigen, in_classify, in_autdim, in_roundtrip, in_check;
  auto* c_theta = app.add_subcommand("theta", "print the controlling spin-tensor");
  add_input_options(c_theta, in_theta);
  auto* c_eigen = app.add_subcommand("eigen", "print its eigenvalues, sorted descending");
  add_input_options(c_eigen, in_eigen);
  auto* c_classify = app.add_subcommand("classify", "compare two tables up to isomorphism");
  add_input_options(c_classify, in_classify);
  auto* c_autdim =
      app.add_subcommand("autdim", "dimension of the automorphism stabilizer algebra");
  add_input_options(c_autdim, in_autdim);
  auto* c_roundtrip =
      app.add_subcommand("roundtrip", "reconstruct the product from the spin-tensor");
  add_input_options(c_roundtrip, in_roundtrip);
  auto* c_check = app.add_subcommand("check", "axiom and metric diagnostics");
  add_input_options(c_check, in_check);
  auto* c_selftest = app.add_subcommand("selftest", "internal consistency diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // 0 for --help, nonzero otherwise
  }

  Report rep(report_path);
  int rc = 0;
  try {
    if (c_theta->parsed()) rc = cmd_theta(in_theta, tol, rep);
    else if (c_eigen->parsed()) rc = cmd_eigen(in_eigen, tol, rep);
    else if (c_classify->parsed()) rc = cmd_classify(in_classify, tol, rep);
    else if (c_autdim->parsed()) rc = cmd_autdim(in_autdim, tol, rep);
    else if (c_roundtrip->parsed()) rc = cmd_roundtrip(in_roundtrip, tol, rep);
    else if (c_check->parsed()) rc = cmd_check(in_check, tol, rep);
    else if (c_selftest->parsed()) rc = cmd_selftest(tol, rep);
    rep.write();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
