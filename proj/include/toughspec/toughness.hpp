#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toughspec/graph.hpp"
#include "toughspec/rational.hpp"
#include "toughspec/thresholds.hpp"

namespace toughspec {

inline constexpr int kMaxToughnessOrder = 30;
inline constexpr std::uint64_t kDefaultSubsetBudget = 500'000'000ULL;

/// Caps on the exhaustive cut search. Exceeding either raises
/// ErrorKind::BudgetExceeded.
struct SearchBudget {
  int max_order = kMaxToughnessOrder;
  std::uint64_t max_subsets = kDefaultSubsetBudget;
};

struct ToughnessResult {
  Rational tau;
  VertexSet witness;
  int component_count = 0;
  std::uint64_t subsets_examined = 0;
};

/// Exact toughness min |S| / c(G - S) over vertex cuts S. The witness is the
/// first minimiser in (|S|, lexicographic) order.
ToughnessResult toughness_exact(const Graph& g, const SearchBudget& budget = {});

struct ToughnessDecision {
  bool tough = true;
  std::optional<VertexSet> violating_set;  // c(G - S) >= b|S| + 1 when not tough
  int component_count = 0;
};

/// Decides tau(G) >= 1/b by searching for S with c(G - S) >= b|S| + 1.
ToughnessDecision is_one_over_b_tough(const Graph& g, int b, const SearchBudget& budget = {});

/// Number of components of G - S, for re-checking witnesses.
int components_after_deletion(const Graph& g, const VertexSet& s);

enum class CensusMode { Phi, Psi };

/// One qualifying component H of G - S with its degree bookkeeping and
/// whether it matches the predicted order / size table.
struct CensusRow {
  VertexSet vertices;   // indices in G
  int order = 0;        // n_H
  int twice_edges = 0;  // 2 m_H
  int edges_to_cut = 0; // e(S, H)
  int expected_order = 0;
  int expected_twice_edges = 0;
  bool order_matches = false;
  bool edges_match = false;
};

/// Components H of G - S with e(S,H) < ceil(d/b) (Phi) or e(S,H) <= d - b
/// (Psi). Requires g to be connected and p.d-regular and s non-empty.
std::vector<CensusRow> component_census(const Graph& g, const VertexSet& s,
                                        const ThresholdParams& p, CensusMode mode);

}  // namespace toughspec
