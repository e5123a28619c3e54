#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toughspec/graph.hpp"
#include "toughspec/thresholds.hpp"
#include "toughspec/toughness.hpp"

namespace toughspec {

enum class Theorem { Lambda2, LambdaB1 };  // λ₂ < φ(d,b), λ_{b+1} < ψ(d,b)
enum class Verdict { Certified, Inconclusive, NotApplicable };

std::string_view to_string(Theorem t);
std::string_view to_string(Verdict v);
Theorem parse_theorem(std::string_view s);  // "3" | "thm3" | "4" | "thm4"

enum class CrossCheckStatus { Confirmed, Refuted, Skipped };
std::string_view to_string(CrossCheckStatus s);

struct CrossCheck {
  CrossCheckStatus status = CrossCheckStatus::Skipped;
  std::optional<VertexSet> violating_set;
  std::string note;
};

/// Outcome of applying one spectral sufficient condition for 1/b-toughness.
/// Certified implies margin > kThresholdTol. No verdict ever claims that a
/// graph is not 1/b-tough.
struct CertReport {
  Theorem theorem = Theorem::Lambda2;
  int d = 0;  // 0 when the graph is not regular
  int b = 0;
  int eigen_index = 0;           // 2 or b + 1
  double eigenvalue_used = 0.0;  // NaN when not applicable
  ThresholdValue threshold;
  Comparison comparison = Comparison::Above;
  Verdict verdict = Verdict::NotApplicable;
  double margin = 0.0;  // threshold - eigenvalue
  std::string reason;   // why NotApplicable, empty otherwise
  std::optional<CrossCheck> cross_check;
};

CertReport certify_thm3(const Graph& g, int b);
CertReport certify_thm4(const Graph& g, int b);
CertReport certify(const Graph& g, int b, Theorem theorem);

/// Runs the exact 1/b-toughness decision and records it on the report.
/// Complete graphs have no vertex cut and count as confirmed.
void run_cross_check(const Graph& g, CertReport& report, const SearchBudget& budget = {});

struct CorpusSummary {
  std::uint64_t total = 0;
  std::uint64_t certified_confirmed = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t not_applicable = 0;
  // Only filled when inconclusive graphs are cross-checked as well.
  std::uint64_t inconclusive_tough = 0;
  std::uint64_t inconclusive_not_tough = 0;
  std::uint64_t contradictions = 0;

  CorpusSummary& operator+=(const CorpusSummary& other);
};

struct CorpusOptions {
  bool cross_check_inconclusive = false;
  SearchBudget budget = {};
};

/// Certified graph that the exact solver proves is not 1/b-tough. Raised as
/// ErrorKind::Contradiction; what() carries the full diagnostic.
class ContradictionError : public Error {
 public:
  ContradictionError(CertReport report, std::string graph6, const std::string& what)
      : Error(ErrorKind::Contradiction, what), report_(std::move(report)), graph6_(std::move(graph6)) {}
  const CertReport& report() const noexcept { return report_; }
  const std::string& graph6() const noexcept { return graph6_; }

 private:
  CertReport report_;
  std::string graph6_;
};

/// Multi-line explanation of a refuted certificate: the record, the
/// violating cut and the component census of G - S.
std::string contradiction_diagnostic(const Graph& g, const CertReport& report);

/// Certifies every graph, cross-checks every Certified verdict with the exact
/// solver, and aborts with ContradictionError on the first disagreement.
CorpusSummary verify_on_corpus(const std::vector<Graph>& graphs, int b, Theorem theorem,
                               const CorpusOptions& options = {});

/// Streaming form; `next` returns std::nullopt at end of input. `on_report`
/// (optional) sees each report after its cross-check.
CorpusSummary verify_on_corpus(const std::function<std::optional<Graph>()>& next, int b,
                               Theorem theorem, const CorpusOptions& options = {},
                               const std::function<void(const Graph&, const CertReport&)>& on_report = {});

inline constexpr int kRandomRegularAttempts = 10'000;

/// Simple d-regular graph from the pairing model, rejecting loops and
/// multi-edges. Deterministic for a fixed seed on every platform.
Graph random_regular(int n, int d, std::uint64_t seed);

/// Draws pairing-model graphs from one seeded stream until one is connected.
Graph random_connected_regular(int n, int d, std::uint64_t seed);

/// Line-oriented key=value record; field order is fixed.
std::string to_record(const CertReport& report, std::string_view graph6 = {});
std::string to_record(const CorpusSummary& summary);

}  // namespace toughspec
