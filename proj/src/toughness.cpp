#include "toughspec/toughness.hpp"

#include <bit>
#include <string>

#include "toughspec/error.hpp"

namespace toughspec {
namespace {

using Mask = std::uint64_t;

struct BitGraph {
  int n = 0;
  std::vector<Mask> rows;
};

BitGraph prepare(const Graph& g, const SearchBudget& budget, const char* what) {
  const int n = g.order();
  if (n > budget.max_order || n > 64)
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + ": order " + std::to_string(n) +
                                               " exceeds search limit " +
                                               std::to_string(budget.max_order));
  if (!is_connected(g))
    throw Error(ErrorKind::UndefinedToughness, "toughness undefined for disconnected graphs");
  if (is_complete(g))
    throw Error(ErrorKind::UndefinedToughness, "toughness undefined for complete graphs");
  BitGraph bg{n, std::vector<Mask>(static_cast<std::size_t>(n))};
  for (Vertex v = 0; v < n; ++v) bg.rows[static_cast<std::size_t>(v)] = g.row_mask(v);
  return bg;
}

int count_components(const BitGraph& g, Mask alive) {
  int count = 0;
  while (alive) {
    Mask frontier = alive & (~alive + 1);
    Mask comp = frontier;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1)
        next |= g.rows[static_cast<std::size_t>(std::countr_zero(f))];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    alive &= ~comp;
    ++count;
  }
  return count;
}

// Visits all k-subsets of 0..n-1 in lexicographic order. The visitor returns
// false to stop the enumeration early.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    if (!visit(idx, m)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void charge(std::uint64_t& used, const SearchBudget& budget) {
  if (++used > budget.max_subsets)
    throw Error(ErrorKind::BudgetExceeded,
                "cut search exceeded budget of " + std::to_string(budget.max_subsets) + " subsets");
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g, const SearchBudget& budget) {
  const BitGraph bg = prepare(g, budget, "toughness_exact");
  const int n = bg.n;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  std::optional<Rational> best;
  std::vector<int> witness;
  int best_components = 0;
  std::uint64_t used = 0;

  for (int k = 1; k <= n - 2; ++k) {
    // c(G - S) <= n - k, so no k-subset can beat the incumbent past this point.
    if (best && Rational(k, n - k) >= *best) break;
    for_each_combination(n, k, [&](const std::vector<int>& idx, Mask s) {
      charge(used, budget);
      const int c = count_components(bg, all & ~s);
      if (c >= 2 && (!best || Rational(k, c) < *best)) {
        best = Rational(k, c);
        witness = idx;
        best_components = c;
      }
      return c < n - k;  // an edgeless remainder is optimal for this k
    });
  }
  // A connected non-complete graph always has a cut of size <= n - 2.
  return ToughnessResult{*best, VertexSet(std::move(witness)), best_components, used};
}

ToughnessDecision is_one_over_b_tough(const Graph& g, int b, const SearchBudget& budget) {
  if (b < 1) throw invalid_argument("b must be >= 1, got " + std::to_string(b));
  const BitGraph bg = prepare(g, budget, "is_one_over_b_tough");
  const int n = bg.n;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  std::uint64_t used = 0;
  ToughnessDecision out;
  for (int k = 1; static_cast<long long>(b) * k + 1 <= n - k; ++k) {
    for_each_combination(n, k, [&](const std::vector<int>& idx, Mask s) {
      charge(used, budget);
      const int c = count_components(bg, all & ~s);
      if (static_cast<long long>(c) >= static_cast<long long>(b) * k + 1) {
        out.tough = false;
        out.violating_set = VertexSet(idx);
        out.component_count = c;
        return false;
      }
      return true;
    });
    if (!out.tough) break;
  }
  return out;
}

int components_after_deletion(const Graph& g, const VertexSet& s) {
  return components(delete_vertices(g, s)).count;
}

std::vector<CensusRow> component_census(const Graph& g, const VertexSet& s,
                                        const ThresholdParams& p, CensusMode mode) {
  const auto degree = is_regular(g);
  if (!degree) throw invalid_argument("component census requires a regular graph");
  if (*degree != p.d)
    throw invalid_argument("graph is " + std::to_string(*degree) + "-regular but d=" + std::to_string(p.d));
  if (!is_connected(g)) throw invalid_argument("component census requires a connected graph");
  if (s.empty()) throw invalid_argument("component census requires a non-empty cut");

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!s.contains(v)) rest.push_back(v);
  const Graph h = delete_vertices(g, s);
  const auto comps = components(h);

  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(comps.count));
  std::vector<int> twice(static_cast<std::size_t>(comps.count), 0);
  for (Vertex v = 0; v < h.order(); ++v) {
    const auto id = static_cast<std::size_t>(comps.labels[v]);
    members[id].push_back(rest[static_cast<std::size_t>(v)]);
    twice[id] += h.degree(v);
  }

  const int d = p.d;
  const int c = p.c;
  const int b = p.b;
  std::vector<CensusRow> rows;
  for (std::size_t id = 0; id < members.size(); ++id) {
    const int n_h = static_cast<int>(members[id].size());
    const int e = d * n_h - twice[id];
    const bool qualifies = mode == CensusMode::Phi ? e < c : e <= d - b;
    if (!qualifies) continue;

    const bool same = (d % 2) == (n_h % 2);
    CensusRow row;
    row.vertices = VertexSet(members[id]);
    row.order = n_h;
    row.twice_edges = twice[id];
    row.edges_to_cut = e;
    row.expected_order = same ? d + 2 : d + 1;
    if (mode == CensusMode::Phi) {
      if (same)
        row.expected_twice_edges = d * (d + 2) - c + ((c % 2) == (d % 2) ? 2 : 1);
      else
        row.expected_twice_edges = d * (d + 1) - c + (c % 2 == 0 ? 2 : 1);
    } else {
      if (same)
        row.expected_twice_edges = d * (d + 2) - d + b + (b % 2 == 1 ? 1 : 0);
      else
        row.expected_twice_edges = d * (d + 1) - d + b + ((n_h % 2) == (b % 2) ? 1 : 0);
    }
    row.order_matches = row.order == row.expected_order;
    row.edges_match = row.twice_edges == row.expected_twice_edges;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace toughspec
