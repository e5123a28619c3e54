#include "toughspec/certify.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "toughspec/error.hpp"
#include "toughspec/graph6.hpp"
#include "toughspec/spectral.hpp"

namespace toughspec {

std::string_view to_string(Theorem t) {
  return t == Theorem::Lambda2 ? "lambda2" : "lambda_b1";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

std::string_view to_string(CrossCheckStatus s) {
  switch (s) {
    case CrossCheckStatus::Confirmed: return "confirmed";
    case CrossCheckStatus::Refuted: return "refuted";
    case CrossCheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view s) {
  if (s == "3" || s == "thm3" || s == "lambda2") return Theorem::Lambda2;
  if (s == "4" || s == "thm4" || s == "lambda_b1") return Theorem::LambdaB1;
  throw invalid_argument("unknown theorem '" + std::string(s) + "' (expected 3 or 4)");
}

CertReport certify(const Graph& g, int b, Theorem theorem) {
  if (b < 1) throw invalid_argument("b must be >= 1, got " + std::to_string(b));
  CertReport r;
  r.theorem = theorem;
  r.b = b;
  r.eigen_index = theorem == Theorem::Lambda2 ? 2 : b + 1;
  r.eigenvalue_used = std::numeric_limits<double>::quiet_NaN();
  r.margin = std::numeric_limits<double>::quiet_NaN();
  r.verdict = Verdict::NotApplicable;

  if (g.order() == 0 || !is_connected(g)) {
    r.reason = "disconnected";
    return r;
  }
  const auto degree = is_regular(g);
  if (!degree) {
    r.reason = "not_regular";
    return r;
  }
  r.d = *degree;
  if (r.d < 1 || g.order() < r.eigen_index) {
    r.reason = "too_few_vertices";
    return r;
  }

  const auto params = ThresholdParams::make(r.d, b);
  r.threshold = theorem == Theorem::Lambda2 ? phi(params) : psi(params);
  r.eigenvalue_used = lambda_k(eigenvalues(g), r.eigen_index);
  r.margin = r.threshold.value - r.eigenvalue_used;
  r.comparison = compare_with_tolerance(r.eigenvalue_used, r.threshold);
  r.verdict = r.comparison == Comparison::Below ? Verdict::Certified : Verdict::Inconclusive;
  return r;
}

CertReport certify_thm3(const Graph& g, int b) { return certify(g, b, Theorem::Lambda2); }
CertReport certify_thm4(const Graph& g, int b) { return certify(g, b, Theorem::LambdaB1); }

void run_cross_check(const Graph& g, CertReport& report, const SearchBudget& budget) {
  CrossCheck cc;
  if (is_complete(g)) {
    cc.status = CrossCheckStatus::Confirmed;
    cc.note = "complete graph has no vertex cut";
  } else {
    const auto decision = is_one_over_b_tough(g, report.b, budget);
    cc.status = decision.tough ? CrossCheckStatus::Confirmed : CrossCheckStatus::Refuted;
    cc.violating_set = decision.violating_set;
  }
  report.cross_check = std::move(cc);
}

CorpusSummary& CorpusSummary::operator+=(const CorpusSummary& o) {
  total += o.total;
  certified_confirmed += o.certified_confirmed;
  inconclusive += o.inconclusive;
  not_applicable += o.not_applicable;
  inconclusive_tough += o.inconclusive_tough;
  inconclusive_not_tough += o.inconclusive_not_tough;
  contradictions += o.contradictions;
  return *this;
}

std::string contradiction_diagnostic(const Graph& g, const CertReport& report) {
  const std::string g6 = write_graph6(g);
  std::ostringstream msg;
  msg << "contradiction: certified graph is not 1/" << report.b << "-tough\n"
      << "  " << to_record(report, g6) << '\n';
  if (!report.cross_check || !report.cross_check->violating_set) return msg.str();
  const auto& cut = *report.cross_check->violating_set;
  msg << "  violating cut S = {";
  for (std::size_t i = 0; i < cut.size(); ++i) msg << (i ? "," : "") << cut[i];
  msg << "}, c(G-S) = " << components_after_deletion(g, cut) << '\n';
  const auto params = ThresholdParams::make(report.d, report.b);
  const auto mode = report.theorem == Theorem::Lambda2 ? CensusMode::Phi : CensusMode::Psi;
  for (const auto& row : component_census(g, cut, params, mode)) {
    msg << "  census: n_H=" << row.order << " (expected " << row.expected_order << ")"
        << " 2m_H=" << row.twice_edges << " (expected " << row.expected_twice_edges << ")"
        << " e(S,H)=" << row.edges_to_cut << '\n';
  }
  return msg.str();
}

namespace {

[[noreturn]] void raise_contradiction(const Graph& g, const CertReport& report) {
  throw ContradictionError(report, write_graph6(g), contradiction_diagnostic(g, report));
}

}  // namespace

CorpusSummary verify_on_corpus(const std::function<std::optional<Graph>()>& next, int b,
                               Theorem theorem, const CorpusOptions& options,
                               const std::function<void(const Graph&, const CertReport&)>& on_report) {
  CorpusSummary summary;
  while (auto g = next()) {
    ++summary.total;
    CertReport report = certify(*g, b, theorem);
    switch (report.verdict) {
      case Verdict::Certified:
        run_cross_check(*g, report, options.budget);
        if (report.cross_check->status == CrossCheckStatus::Refuted) {
          ++summary.contradictions;
          if (on_report) on_report(*g, report);
          raise_contradiction(*g, report);
        }
        ++summary.certified_confirmed;
        break;
      case Verdict::Inconclusive:
        ++summary.inconclusive;
        if (options.cross_check_inconclusive) {
          run_cross_check(*g, report, options.budget);
          if (report.cross_check->status == CrossCheckStatus::Confirmed)
            ++summary.inconclusive_tough;
          else
            ++summary.inconclusive_not_tough;
        }
        break;
      case Verdict::NotApplicable:
        ++summary.not_applicable;
        break;
    }
    if (on_report) on_report(*g, report);
  }
  return summary;
}

CorpusSummary verify_on_corpus(const std::vector<Graph>& graphs, int b, Theorem theorem,
                               const CorpusOptions& options) {
  std::size_t i = 0;
  return verify_on_corpus(
      [&]() -> std::optional<Graph> {
        if (i == graphs.size()) return std::nullopt;
        return graphs[i++];
      },
      b, theorem, options);
}

}  // namespace toughspec
