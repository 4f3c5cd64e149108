#include <qsym/qsym.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qsym;

namespace {

enum Exit { kOk = 0, kUsage = 2, kInvalid = 3, kCrossCheck = 4 };

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string render(const SymFunc& f, const std::string& format) {
  return format == "text" ? format_symfunc(f) + "\n" : symfunc_to_json(f);
}

struct QkArgs {
  int n = 0;
  std::optional<int> max_len;
  bool inverse = false;
  std::string output;
};

int run_qk(const QkArgs& a) {
  if (a.n < 1) throw ValidationError("n must be at least 1");
  PartitionMatrix m = a.inverse ? *inverse_quasi_kostka(a.n, a.max_len) : quasi_kostka_matrix(a.n, a.max_len);
  emit(matrix_to_csv(m), a.output);
  std::cerr << "max |entry|: " << m.max_abs_entry() << "\n";
  return kOk;
}

struct F2sArgs {
  std::string input;
  bool via_chains = false;
  bool skip_symmetry_check = false;
  std::string format = "json";
  std::string output;
};

int run_f2s(const F2sArgs& a) {
  const SymFunc f = symfunc_from_json(slurp(a.input));
  if (f.basis() != Basis::F) throw ValidationError("input must be in the F basis");
  SchurOptions opt;
  opt.skip_symmetry_check = a.skip_symmetry_check;
  const SymFunc g = a.via_chains ? F_to_schur_via_chains(f, a.skip_symmetry_check) : F_to_schur(f, opt);
  emit(render(g, a.format), a.output);
  return kOk;
}

struct PlethysmArgs {
  std::string lam, mu;
  std::string basis = "s";
  bool leading_only = false;
  int size_guard = kDefaultSizeGuard;
  std::string format = "json";
  std::string output;
};

int run_plethysm(const PlethysmArgs& a) {
  const Partition lam = parse_partition(a.lam);
  const Partition mu = parse_partition(a.mu);
  if (a.leading_only) {
    emit(format_partition(leading_term(lam, mu)) + "\n", a.output);
    return kOk;
  }
  const Basis b = parse_basis(a.basis);
  if (b == Basis::M) throw ValidationError("basis must be F or s");
  const SymFunc f = b == Basis::F ? plethysm_F(lam, mu, a.size_guard) : plethysm_schur(lam, mu, a.size_guard);
  emit(render(f, a.format), a.output);
  return kOk;
}

struct TwovarArgs {
  int w = 0, h = 0;
  std::string method = "formula";
  std::string output;
};

int run_twovar(const TwovarArgs& a) {
  TwoRowPoly result;
  if (a.method == "all") {
    std::vector<TwoVarMethod> methods{TwoVarMethod::formula, TwoVarMethod::oracle};
    if (a.w <= 4) methods.push_back(TwoVarMethod::scd);
    result = two_var_plethysm(a.w, a.h, methods.front());
    for (std::size_t i = 1; i < methods.size(); ++i) {
      if (two_var_plethysm(a.w, a.h, methods[i]) != result)
        throw CrossCheckError(std::string("method ") + std::string(method_name(methods[i])) + " disagrees with " +
                              std::string(method_name(methods.front())));
    }
    std::cerr << "agreement:";
    for (auto m : methods) std::cerr << " " << method_name(m);
    std::cerr << "\n";
  } else {
    result = two_var_plethysm(a.w, a.h, parse_method(a.method));
  }
  emit(two_row_to_json(a.w, a.h, result), a.output);
  return kOk;
}

struct ScdArgs {
  int w = 0, h = 0;
  bool certify = false;
  std::string golden;
  std::string output;
};

int run_scd(const ScdArgs& a) {
  ChainDecomposition d = build_scd(a.w, a.h);
  d.canonicalize();
  emit(chains_to_json(d), a.output);
  int code = kOk;
  if (a.certify) {
    const CertifyReport report = certify(d);
    std::cout << report.to_text();
    if (!report.all_passed()) code = kCrossCheck;
  }
  if (!a.golden.empty()) {
    ChainDecomposition g = chains_from_json(slurp(a.golden));
    g.canonicalize();
    const bool same = g.w == d.w && g.h == d.h && g.chains == d.chains;
    std::cout << "golden " << a.golden << ": " << (same ? "match" : "MISMATCH") << "\n";
    if (!same) code = kCrossCheck;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasisymmetric expansions, plethysm and symmetric chain decompositions"};
  app.require_subcommand(1);

  QkArgs qk;
  auto* qk_cmd = app.add_subcommand("qk", "quasi-Kostka matrix or its inverse as CSV");
  qk_cmd->add_option("n", qk.n, "degree")->required();
  qk_cmd->add_option("--max-len", qk.max_len, "keep partitions with at most this many parts")
      ->check(CLI::PositiveNumber);
  qk_cmd->add_flag("--inverse", qk.inverse, "write the inverse matrix");
  qk_cmd->add_option("-o,--output", qk.output, "output file");

  F2sArgs f2s;
  auto* f2s_cmd = app.add_subcommand("f2s", "convert an F expansion to the Schur basis");
  f2s_cmd->add_option("input", f2s.input, "SymFunc JSON file")->required();
  f2s_cmd->add_flag("--via-chains", f2s.via_chains, "use signed chains instead of the inverse matrix");
  f2s_cmd->add_flag("--skip-symmetry-check", f2s.skip_symmetry_check, "do not test symmetry first");
  f2s_cmd->add_option("--format", f2s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  f2s_cmd->add_option("-o,--output", f2s.output, "output file");

  PlethysmArgs pl;
  auto* pl_cmd = app.add_subcommand("plethysm", "expand s_lam[s_mu]");
  pl_cmd->add_option("lam", pl.lam, "outer partition, e.g. [2,1]")->required();
  pl_cmd->add_option("mu", pl.mu, "inner partition")->required();
  pl_cmd->add_option("--basis", pl.basis, "F or s")->check(CLI::IsMember({"F", "s"}));
  pl_cmd->add_flag("--leading-only", pl.leading_only, "print only the leading partition");
  pl_cmd->add_option("--size-guard", pl.size_guard, "largest allowed |lam|*|mu|")->check(CLI::NonNegativeNumber);
  pl_cmd->add_option("--format", pl.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  pl_cmd->add_option("-o,--output", pl.output, "output file");

  TwovarArgs tv;
  auto* tv_cmd = app.add_subcommand("twovar", "two-row part of s_w[s_h]");
  tv_cmd->add_option("width", tv.w, "w")->required()->check(CLI::NonNegativeNumber);
  tv_cmd->add_option("height", tv.h, "h")->required()->check(CLI::NonNegativeNumber);
  tv_cmd->add_option("--method", tv.method, "formula, scd, oracle or all")
      ->check(CLI::IsMember({"formula", "scd", "oracle", "all"}));
  tv_cmd->add_option("-o,--output", tv.output, "output file");

  ScdArgs scd;
  auto* scd_cmd = app.add_subcommand("scd", "symmetric chain decomposition of L(w,h)");
  scd_cmd->add_option("width", scd.w, "w")->required()->check(CLI::NonNegativeNumber);
  scd_cmd->add_option("height", scd.h, "h")->required()->check(CLI::NonNegativeNumber);
  scd_cmd->add_flag("--certify", scd.certify, "append the certification report");
  scd_cmd->add_option("--golden", scd.golden, "compare against a chain file");
  scd_cmd->add_option("-o,--output", scd.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*qk_cmd) return run_qk(qk);
    if (*f2s_cmd) return run_f2s(f2s);
    if (*pl_cmd) return run_plethysm(pl);
    if (*tv_cmd) return run_twovar(tv);
    if (*scd_cmd) return run_scd(scd);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return kCrossCheck;
  }
  return kUsage;
}
