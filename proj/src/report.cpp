#include <cmath>
#include <cstdio>
#include <string>

#include "toughspec/certify.hpp"

namespace toughspec {
namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string join_set(const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

std::string to_record(const CertReport& r, std::string_view graph6) {
  const bool applicable = r.verdict != Verdict::NotApplicable;
  std::string out;
  out += "theorem=" + std::string(to_string(r.theorem));
  out += " d=" + std::to_string(r.d);
  out += " b=" + std::to_string(r.b);
  out += " index=" + std::to_string(r.eigen_index);
  out += " eigenvalue=" + num(r.eigenvalue_used);
  out += " threshold=" + (applicable ? num(r.threshold.value) : std::string("nan"));
  out += " branch=" + (applicable ? std::string(to_string(r.threshold.branch)) : std::string("-"));
  out += " comparison=" + (applicable ? std::string(to_string(r.comparison)) : std::string("-"));
  out += " verdict=" + std::string(to_string(r.verdict));
  out += " margin=" + num(r.margin);
  out += " reason=" + (r.reason.empty() ? std::string("-") : r.reason);
  if (r.cross_check) {
    out += " cross_check=" + std::string(to_string(r.cross_check->status));
    out += " violating=" + (r.cross_check->violating_set ? join_set(*r.cross_check->violating_set)
                                                         : std::string("-"));
  } else {
    out += " cross_check=none violating=-";
  }
  out += " graph6=" + (graph6.empty() ? std::string("-") : std::string(graph6));
  return out;
}

std::string to_record(const CorpusSummary& s) {
  return "summary total=" + std::to_string(s.total) +
         " certified_confirmed=" + std::to_string(s.certified_confirmed) +
         " inconclusive=" + std::to_string(s.inconclusive) +
         " not_applicable=" + std::to_string(s.not_applicable) +
         " inconclusive_tough=" + std::to_string(s.inconclusive_tough) +
         " inconclusive_not_tough=" + std::to_string(s.inconclusive_not_tough) +
         " contradictions=" + std::to_string(s.contradictions);
}

}  // namespace toughspec
