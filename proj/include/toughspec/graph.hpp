#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace toughspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Undirected simple graph on vertices 0..n-1 with a dense bit-matrix
/// adjacency. Rows are stored as 64-bit words so membership tests and
/// neighbourhood masks stay O(1) per word.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  // Adds the edge {u, v}; loops are rejected and repeated edges are no-ops.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Low word of the adjacency row; only meaningful when order() <= 64.
  std::uint64_t row_mask(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(Vertex v) const;
  std::size_t word_index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64;
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct ComponentDecomposition {
  std::vector<int> labels;  // labels[v] in 0..count-1
  int count = 0;
};

ComponentDecomposition components(const Graph& g);
bool is_connected(const Graph& g);

/// Induced subgraph on V \ s, relabelled in increasing vertex order.
Graph delete_vertices(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
/// Complement of k disjoint edges: the cocktail-party graph on 2k vertices.
Graph copies_k2_complement(int k);
Graph petersen();

std::optional<int> is_regular(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace toughspec
