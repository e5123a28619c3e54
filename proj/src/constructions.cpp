#include "toughspec/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "toughspec/error.hpp"

namespace toughspec {
namespace {

Error infeasible(const ExtremalSpec& s, const std::string& why) {
  return Error(ErrorKind::Infeasible, std::string(to_string(s.family)) + "(" + std::to_string(s.d) +
                                          "," + std::to_string(s.b) + ") infeasible: " + why);
}

int ceil_div(int d, int b) { return (d + b - 1) / b; }

// Number of degree-(d-1) vertices each branch of H(d, b) must have.
int expected_deficiency(int d, int c) {
  if (c <= 2) return 1;
  if (c % 2 == 1) return c - 1;
  if (d % 2 == 1) return c - 1;
  return c - 2;
}

Graph build_H_unchecked(int d, int c) {
  if (c <= 2) return join(disjoint_union(complete(1), complete(2)), copies_k2_complement((d - 1) / 2));
  if (c % 2 == 1) return join(complete(d - c + 2), copies_k2_complement((c - 1) / 2));
  if (d % 2 == 1) return join(complement(cycle(c - 1)), copies_k2_complement((d - c + 3) / 2));
  return join(complete(d - c + 3), copies_k2_complement((c - 2) / 2));
}

// d disjoint copies of h, plus a hub matched to the deficient vertices of
// every copy (i-th hub vertex to the i-th deficient vertex). Hub vertices
// take indices 0..|hub|-1.
ExtremalGraph attach_copies(const ExtremalSpec& spec, const Graph& h) {
  const VertexSet deficient = deficient_vertices(h, spec.d);
  const int s = static_cast<int>(deficient.size());
  const int nh = h.order();
  Graph g(s + spec.d * nh);
  const auto h_edges = h.edges();
  for (int copy = 0; copy < spec.d; ++copy) {
    const int offset = s + copy * nh;
    for (auto [u, v] : h_edges) g.add_edge(offset + u, offset + v);
    for (int i = 0; i < s; ++i) g.add_edge(i, offset + deficient[static_cast<std::size_t>(i)]);
  }
  std::vector<Vertex> hub(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) hub[static_cast<std::size_t>(i)] = i;

  const auto degree = is_regular(g);
  if (!degree || *degree != spec.d)
    throw infeasible(spec, "construction is not " + std::to_string(spec.d) + "-regular");
  if (!is_connected(g)) throw infeasible(spec, "construction is disconnected");
  return ExtremalGraph{spec, std::move(g), VertexSet(std::move(hub))};
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::G1star: return "G1star";
    case Family::G2star: return "G2star";
    case Family::G3star: return "G3star";
    case Family::G4star: return "G4star";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "h") return Family::H;
  if (lower == "g1star" || lower == "g1") return Family::G1star;
  if (lower == "g2star" || lower == "g2") return Family::G2star;
  if (lower == "g3star" || lower == "g3") return Family::G3star;
  if (lower == "g4star" || lower == "g4") return Family::G4star;
  throw invalid_argument("unknown family '" + std::string(name) + "'");
}

void check_feasible(const ExtremalSpec& spec) {
  if (spec.d < 1) throw infeasible(spec, "requires d >= 1");
  if (spec.b < 1) throw infeasible(spec, "requires b >= 1");
  const int c = ceil_div(spec.d, spec.b);
  const std::string cs = "ceil(d/b)=" + std::to_string(c);
  switch (spec.family) {
    case Family::H:
      if (c <= 2 && spec.d % 2 == 0) throw infeasible(spec, cs + " <= 2 requires d odd");
      break;
    case Family::G1star:
      if (c < 3 || c % 2 == 0) throw infeasible(spec, "requires odd " + cs + " >= 3");
      break;
    case Family::G2star:
      if (c < 3 || c % 2 == 1) throw infeasible(spec, "requires even " + cs + " >= 3");
      if (spec.d % 2 == 0) throw infeasible(spec, "requires d odd");
      break;
    case Family::G3star:
      if (c < 3 || c % 2 == 1) throw infeasible(spec, "requires even " + cs + " >= 3");
      if (spec.d % 2 == 1) throw infeasible(spec, "requires d even");
      break;
    case Family::G4star:
      if (c != 2) throw infeasible(spec, "requires " + cs + " == 2");
      if (spec.d % 2 == 0) throw infeasible(spec, "requires d odd");
      break;
  }
}

bool is_feasible(const ExtremalSpec& spec) {
  try {
    check_feasible(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

VertexSet deficient_vertices(const Graph& h, int d) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) == d - 1) out.push_back(v);
  return VertexSet(std::move(out));
}

Graph build_H(int d, int b) {
  const ExtremalSpec spec{Family::H, d, b};
  check_feasible(spec);
  const int c = ceil_div(d, b);
  Graph h = build_H_unchecked(d, c);

  const auto deficient = deficient_vertices(h, d);
  const int expected = expected_deficiency(d, c);
  if (static_cast<int>(deficient.size()) != expected)
    throw infeasible(spec, "expected " + std::to_string(expected) + " vertices of degree d-1, found " +
                               std::to_string(deficient.size()));
  for (Vertex v = 0; v < h.order(); ++v) {
    const int deg = h.degree(v);
    if (deg != d && deg != d - 1)
      throw infeasible(spec, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
  }
  return h;
}

ExtremalGraph build_extremal(const ExtremalSpec& spec) {
  check_feasible(spec);
  if (spec.family == Family::H) return ExtremalGraph{spec, build_H(spec.d, spec.b), VertexSet{}};
  return attach_copies(spec, build_H(spec.d, spec.b));
}

Graph build_G1star(int d, int b) { return build_extremal({Family::G1star, d, b}).graph; }
Graph build_G2star(int d, int b) { return build_extremal({Family::G2star, d, b}).graph; }
Graph build_G3star(int d, int b) { return build_extremal({Family::G3star, d, b}).graph; }
Graph build_G4star(int d, int b) { return build_extremal({Family::G4star, d, b}).graph; }

}  // namespace toughspec
