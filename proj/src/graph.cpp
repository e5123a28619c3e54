#include "toughspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "toughspec/error.hpp"

namespace toughspec {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0)
    throw invalid_argument("vertex index " + std::to_string(members_.front()) +
                           " is negative");
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw invalid_argument("graph order must be non-negative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(n_));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[word_index(u, v)] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  const auto* row = bits_.data() + static_cast<std::size_t>(v) * words_;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row[w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  const auto* row = bits_.data() + static_cast<std::size_t>(v) * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = row[w];
    while (word) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw invalid_argument("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  bits_[word_index(u, v)] |= std::uint64_t{1} << (v % 64);
  bits_[word_index(v, u)] |= std::uint64_t{1} << (u % 64);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return;
  bits_[word_index(u, v)] &= ~(std::uint64_t{1} << (v % 64));
  bits_[word_index(v, u)] &= ~(std::uint64_t{1} << (u % 64));
  --edges_;
}

std::uint64_t Graph::row_mask(Vertex v) const {
  check_vertex(v);
  return bits_[static_cast<std::size_t>(v) * words_];
}

ComponentDecomposition components(const Graph& g) {
  const int n = g.order();
  ComponentDecomposition out;
  out.labels.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (out.labels[root] >= 0) continue;
    const int id = out.count++;
    out.labels[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (out.labels[w] < 0) {
          out.labels[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).count == 1; }

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (Vertex v : keep)
    if (v >= g.order())
      throw invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(g.order()));
  const auto& members = keep.members();
  Graph h(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.has_edge(members[i], members[j]))
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v >= g.order())
      throw invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(g.order()));
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(g.order()) - s.size());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!s.contains(v)) keep.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph h(n1 + g2.order());
  for (auto [u, v] : g1.edges()) h.add_edge(u, v);
  for (auto [u, v] : g2.edges()) h.add_edge(u + n1, v + n1);
  return h;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph h = disjoint_union(g1, g2);
  const int n1 = g1.order();
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < g2.order(); ++v) h.add_edge(u, n1 + v);
  return h;
}

Graph complete(int n) { return complement(edgeless(n)); }

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw invalid_argument("cycle requires n >= 3, got " + std::to_string(n));
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_bipartite(int a, int b) { return join(edgeless(a), edgeless(b)); }

Graph copies_k2_complement(int k) {
  if (k < 0) throw invalid_argument("copies_k2_complement requires k >= 0");
  Graph g = complete(2 * k);
  for (Vertex i = 0; i < k; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace toughspec
