// toughspec: spectra, exact toughness, extremal constructions and spectral
// 1/b-toughness certificates for graphs given as graph6 lines.
//
// Exit codes: 0 ok, 1 usage / invalid argument, 2 graph6 parse error,
// 3 toughness undefined, 4 search budget exceeded, 5 infeasible
// parameters, 6 certificate contradiction.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toughspec/certify.hpp"
#include "toughspec/constructions.hpp"
#include "toughspec/graph6.hpp"
#include "toughspec/spectral.hpp"
#include "toughspec/thresholds.hpp"
#include "toughspec/toughness.hpp"

using namespace toughspec;

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kUndefined = 3,
  kBudget = 4,
  kInfeasible = 5,
  kContradiction = 6,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::UndefinedToughness: return kUndefined;
    case ErrorKind::BudgetExceeded: return kBudget;
    case ErrorKind::Infeasible: return kInfeasible;
    case ErrorKind::Contradiction: return kContradiction;
    case ErrorKind::InvalidArgument:
    case ErrorKind::NonRealSpectrum: return kUsage;
  }
  return kUsage;
}

struct InputOptions {
  std::string path;
  std::vector<std::string> inline_graphs;
};

struct OutputOptions {
  std::string format = "human";
  bool structured() const { return format == "structured"; }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "graph6 file, one graph per line ('-' or omitted: stdin)");
  cmd->add_option("-g,--graph6", in.inline_graphs, "inline graph6 string (repeatable)");
}

void add_format(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
}

std::vector<Graph> load_graphs(const InputOptions& in) {
  std::vector<Graph> graphs;
  for (const auto& s : in.inline_graphs) graphs.push_back(parse_graph6(s));
  if (!in.inline_graphs.empty() && in.path.empty()) return graphs;
  if (in.path.empty() || in.path == "-") {
    auto more = read_graph6_lines(std::cin);
    graphs.insert(graphs.end(), more.begin(), more.end());
    return graphs;
  }
  std::ifstream file(in.path);
  if (!file) throw invalid_argument("cannot open input file '" + in.path + "'");
  auto more = read_graph6_lines(file);
  graphs.insert(graphs.end(), more.begin(), more.end());
  return graphs;
}

std::string fmt10(double x) {
  if (std::abs(x) < kSpectralTol) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string set_str(const VertexSet& s, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

// Inclusive range "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw invalid_argument("bad range '" + text + "' (expected N or A..B)");
  }
}

SearchBudget budget_from(std::optional<std::uint64_t> flag) {
  SearchBudget budget;
  if (flag) {
    budget.max_subsets = *flag;
  } else if (const char* env = std::getenv("TOUGHSPEC_BUDGET")) {
    try {
      budget.max_subsets = std::stoull(env);
    } catch (const std::exception&) {
      throw invalid_argument(std::string("TOUGHSPEC_BUDGET is not an integer: ") + env);
    }
  }
  return budget;
}

int cmd_spectrum(const InputOptions& in, const OutputOptions& out) {
  for (const Graph& g : load_graphs(in)) {
    const auto spec = eigenvalues(g);
    std::string line;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      if (i) line += out.structured() ? "," : " ";
      line += fmt10(spec.values[i]);
    }
    if (out.structured())
      std::cout << "graph6=" << write_graph6(g) << " n=" << g.order() << " eigenvalues=" << line << '\n';
    else
      std::cout << line << '\n';
  }
  return kOk;
}

int cmd_tough(const InputOptions& in, const OutputOptions& out, std::optional<int> b,
              const SearchBudget& budget) {
  for (const Graph& g : load_graphs(in)) {
    const std::string g6 = write_graph6(g);
    if (b) {
      const auto dec = is_one_over_b_tough(g, *b, budget);
      if (out.structured()) {
        std::cout << "graph6=" << g6 << " b=" << *b << " tough=" << (dec.tough ? "true" : "false")
                  << " witness=" << (dec.violating_set ? set_str(*dec.violating_set) : "-")
                  << " components=" << dec.component_count << '\n';
      } else if (dec.tough) {
        std::cout << "1/" << *b << "-tough\n";
      } else {
        std::cout << "NOT 1/" << *b << "-tough; witness S = {" << set_str(*dec.violating_set, ", ")
                  << "} with c(G-S) = " << dec.component_count << '\n';
      }
    } else {
      const auto r = toughness_exact(g, budget);
      if (out.structured())
        std::cout << "graph6=" << g6 << " tau=" << r.tau << " witness=" << set_str(r.witness)
                  << " components=" << r.component_count << '\n';
      else
        std::cout << r.tau << "  witness S = {" << set_str(r.witness, ", ") << "} c(G-S) = "
                  << r.component_count << '\n';
    }
  }
  return kOk;
}

int cmd_construct(const std::string& family_name, int d, int b, const std::string& out_path,
                  bool verify, const SearchBudget& budget) {
  const ExtremalSpec spec{parse_family(family_name), d, b};
  const ExtremalGraph ex = build_extremal(spec);
  const std::string g6 = write_graph6(ex.graph);
  if (out_path.empty()) {
    std::cout << g6 << '\n';
  } else {
    std::ofstream file(out_path);
    if (!file) throw invalid_argument("cannot open output file '" + out_path + "'");
    file << g6 << '\n';
  }
  if (!verify) return kOk;

  bool all = true;
  auto row = [&](const std::string& check, bool pass, const std::string& detail) {
    all = all && pass;
    std::cout << "verify " << check << ' ' << (pass ? "pass" : "FAIL");
    if (!detail.empty()) std::cout << ' ' << detail;
    std::cout << '\n';
  };
  if (spec.family == Family::H) {
    const auto deficient = deficient_vertices(ex.graph, d);
    row("degrees", true, std::to_string(deficient.size()) + " vertices of degree d-1");
    return all ? kOk : kUsage;
  }
  const auto degree = is_regular(ex.graph);
  row("regular", degree && *degree == d, std::to_string(d) + "-regular, n=" + std::to_string(ex.graph.order()));
  row("connected", is_connected(ex.graph), "");
  const auto params = ThresholdParams::make(d, b);
  const auto threshold = phi(params);
  const double l2 = lambda_k(ex.graph, 2);
  row("boundary", compare_with_tolerance(l2, threshold) == Comparison::Boundary,
      "lambda2=" + fmt10(l2) + " phi=" + fmt10(threshold.value));
  if (ex.graph.order() <= budget.max_order) {
    const auto dec = is_one_over_b_tough(ex.graph, b, budget);
    row("not_tough", !dec.tough,
        dec.violating_set ? "exact witness S = {" + set_str(*dec.violating_set) + "}" : "exact search found no cut");
  } else {
    const int c = components_after_deletion(ex.graph, ex.hub);
    row("not_tough", c >= b * static_cast<int>(ex.hub.size()) + 1,
        "hub witness |S|=" + std::to_string(ex.hub.size()) + " c(G-S)=" + std::to_string(c));
  }
  return all ? kOk : kUsage;
}

void print_report(const Graph& g, const CertReport& r, const OutputOptions& out) {
  if (out.structured()) {
    std::cout << to_record(r, write_graph6(g)) << '\n';
    return;
  }
  std::cout << to_string(r.verdict);
  if (r.verdict == Verdict::NotApplicable) {
    std::cout << " (" << r.reason << ")\n";
    return;
  }
  std::cout << ": lambda_" << r.eigen_index << "=" << fmt10(r.eigenvalue_used) << " "
            << (r.comparison == Comparison::Below ? "<" : r.comparison == Comparison::Above ? ">" : "~=")
            << " threshold=" << fmt10(r.threshold.value) << " [" << to_string(r.threshold.branch)
            << "] d=" << r.d << " b=" << r.b << " margin=" << fmt10(r.margin);
  if (r.comparison == Comparison::Boundary) std::cout << " (boundary)";
  if (r.cross_check) std::cout << " cross_check=" << to_string(r.cross_check->status);
  std::cout << '\n';
}

int cmd_certify(const InputOptions& in, const OutputOptions& out, int b, Theorem theorem,
                bool cross_check, const SearchBudget& budget) {
  for (const Graph& g : load_graphs(in)) {
    CertReport r = certify(g, b, theorem);
    if (cross_check && r.verdict == Verdict::Certified) {
      if (g.order() <= budget.max_order) {
        run_cross_check(g, r, budget);
      } else {
        r.cross_check = CrossCheck{CrossCheckStatus::Skipped, std::nullopt, "order exceeds search limit"};
      }
    }
    print_report(g, r, out);
    if (r.cross_check && r.cross_check->status == CrossCheckStatus::Refuted) {
      std::cerr << contradiction_diagnostic(g, r);
      return kContradiction;
    }
  }
  return kOk;
}

int cmd_verify_corpus(int n, int d, int b, std::uint64_t count, std::uint64_t seed, Theorem theorem,
                      const OutputOptions& out, bool show_reports, const SearchBudget& budget) {
  if (n > 24) throw invalid_argument("--n must be <= 24 for exact cross-checking");
  // Surface infeasible (n, d) even when --count is 0.
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw Error(ErrorKind::Infeasible, "n·d must be even, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  if (d < 0 || d >= n) throw Error(ErrorKind::Infeasible, "degree must satisfy 0 <= d < n");
  std::uint64_t i = 0;
  CorpusOptions options;
  options.cross_check_inconclusive = true;
  options.budget = budget;
  auto next = [&]() -> std::optional<Graph> {
    if (i == count) return std::nullopt;
    return random_connected_regular(n, d, seed + i++);
  };
  auto on_report = [&](const Graph& g, const CertReport& r) {
    if (show_reports) print_report(g, r, out);
  };
  try {
    const auto summary = verify_on_corpus(next, b, theorem, options, on_report);
    if (out.structured()) {
      std::cout << to_record(summary) << '\n';
    } else {
      std::cout << "graphs: " << summary.total << '\n'
                << "certified (confirmed): " << summary.certified_confirmed << '\n'
                << "inconclusive: " << summary.inconclusive << " (tough " << summary.inconclusive_tough
                << ", not tough " << summary.inconclusive_not_tough << ")\n"
                << "not applicable: " << summary.not_applicable << '\n'
                << "contradictions: " << summary.contradictions << '\n';
    }
  } catch (const ContradictionError& e) {
    std::cerr << e.what();
    return kContradiction;
  }
  return kOk;
}

int cmd_thresholds(const std::string& d_range, const std::string& b_range, const OutputOptions& out) {
  const auto [d_lo, d_hi] = parse_range(d_range);
  const auto [b_lo, b_hi] = parse_range(b_range);
  if (d_lo < 1 || b_lo < 1) throw invalid_argument("ranges must start at >= 1");
  if (!out.structured()) std::cout << "d\tb\tc\tphi_branch\tphi\tpsi_branch\tpsi\n";
  for (int d = d_lo; d <= d_hi; ++d) {
    for (int b = b_lo; b <= b_hi; ++b) {
      const auto p = ThresholdParams::make(d, b);
      const auto f = phi(p);
      const auto s = psi(p);
      if (out.structured())
        std::cout << "d=" << d << " b=" << b << " c=" << p.c << " phi_branch=" << to_string(f.branch)
                  << " phi=" << fmt6(f.value) << " psi_branch=" << to_string(s.branch) << " psi=" << fmt6(s.value)
                  << '\n';
      else
        std::cout << d << '\t' << b << '\t' << p.c << '\t' << to_string(f.branch) << '\t' << fmt6(f.value) << '\t'
                  << to_string(s.branch) << '\t' << fmt6(s.value) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph toughness, adjacency spectra and spectral toughness certificates"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> budget_flag;
  app.add_option("--budget", budget_flag, "maximum subsets examined by exact search (env TOUGHSPEC_BUDGET)");

  InputOptions spectrum_in, tough_in, certify_in;
  OutputOptions spectrum_out, tough_out, certify_out, corpus_out, thresholds_out;

  auto* spectrum = app.add_subcommand("spectrum", "print adjacency eigenvalues, descending");
  add_input(spectrum, spectrum_in);
  add_format(spectrum, spectrum_out);

  std::optional<int> tough_b;
  auto* tough = app.add_subcommand("tough", "exact toughness, or the 1/b-toughness decision with --b");
  add_input(tough, tough_in);
  add_format(tough, tough_out);
  tough->add_option("--b", tough_b, "decide 1/b-toughness instead of computing tau")->check(CLI::PositiveNumber);

  std::string family;
  int cons_d = 0, cons_b = 0;
  std::string cons_out;
  bool cons_verify = false;
  auto* construct = app.add_subcommand("construct", "build an extremal graph as graph6");
  construct->add_option("family", family, "H, G1star, G2star, G3star or G4star")->required();
  construct->add_option("d", cons_d, "degree")->required();
  construct->add_option("b", cons_b, "toughness denominator")->required();
  construct->add_option("-o,--out", cons_out, "write graph6 to this file");
  construct->add_flag("--verify", cons_verify, "check regularity, connectivity, boundary and non-toughness");

  int cert_b = 1;
  std::string cert_theorem = "3";
  bool cert_cross = false;
  auto* certify_cmd = app.add_subcommand("certify", "apply a spectral 1/b-toughness certificate");
  add_input(certify_cmd, certify_in);
  add_format(certify_cmd, certify_out);
  certify_cmd->add_option("--b", cert_b, "toughness denominator")->required()->check(CLI::PositiveNumber);
  certify_cmd->add_option("--theorem", cert_theorem, "3: lambda_2 vs phi(d,b); 4: lambda_{b+1} vs psi(d,b)")
      ->check(CLI::IsMember({"3", "4"}))
      ->capture_default_str();
  certify_cmd->add_flag("--cross-check", cert_cross, "confirm certified graphs with the exact solver");

  int vc_n = 0, vc_d = 0, vc_b = 1;
  std::uint64_t vc_count = 100, vc_seed = 1;
  std::string vc_theorem = "3";
  bool vc_reports = false;
  auto* corpus = app.add_subcommand("verify-corpus", "certify random connected regular graphs and cross-check");
  corpus->add_option("--n", vc_n, "vertices")->required();
  corpus->add_option("--d", vc_d, "degree")->required();
  corpus->add_option("--b", vc_b, "toughness denominator")->check(CLI::PositiveNumber)->capture_default_str();
  corpus->add_option("--count", vc_count, "number of graphs")->capture_default_str();
  corpus->add_option("--seed", vc_seed, "base seed")->capture_default_str();
  corpus->add_option("--theorem", vc_theorem, "3 or 4")->check(CLI::IsMember({"3", "4"}))->capture_default_str();
  corpus->add_flag("--reports", vc_reports, "print one report per graph before the summary");
  add_format(corpus, corpus_out);

  std::string d_range = "3..6", b_range = "1..3";
  auto* thresholds = app.add_subcommand("thresholds", "tabulate phi(d,b) and psi(d,b)");
  thresholds->add_option("--d-range", d_range, "N or A..B")->capture_default_str();
  thresholds->add_option("--b-range", b_range, "N or A..B")->capture_default_str();
  add_format(thresholds, thresholds_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  std::cout.setf(std::ios::unitbuf);
  try {
    const SearchBudget budget = budget_from(budget_flag);
    if (*spectrum) return cmd_spectrum(spectrum_in, spectrum_out);
    if (*tough) return cmd_tough(tough_in, tough_out, tough_b, budget);
    if (*construct) return cmd_construct(family, cons_d, cons_b, cons_out, cons_verify, budget);
    if (*certify_cmd)
      return cmd_certify(certify_in, certify_out, cert_b, parse_theorem(cert_theorem), cert_cross, budget);
    if (*corpus)
      return cmd_verify_corpus(vc_n, vc_d, vc_b, vc_count, vc_seed, parse_theorem(vc_theorem), corpus_out,
                               vc_reports, budget);
    if (*thresholds) return cmd_thresholds(d_range, b_range, thresholds_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
