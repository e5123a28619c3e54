#pragma once

#include <string_view>

#include "toughspec/graph.hpp"

namespace toughspec {

enum class Family { H, G1star, G2star, G3star, G4star };

std::string_view to_string(Family f);
// Accepts "H", "G1star".."G4star" (case-insensitive); throws on anything else.
Family parse_family(std::string_view name);

struct ExtremalSpec {
  Family family = Family::H;
  int d = 0;
  int b = 0;
};

/// A built extremal graph together with its attachment set S. For H the hub
/// is empty.
struct ExtremalGraph {
  ExtremalSpec spec;
  Graph graph;
  VertexSet hub;
};

/// Building block H(d, b). Throws ErrorKind::Infeasible naming the violated
/// parity or range constraint.
Graph build_H(int d, int b);

Graph build_G1star(int d, int b);
Graph build_G2star(int d, int b);
Graph build_G3star(int d, int b);
Graph build_G4star(int d, int b);

/// Builds any family and returns the hub set alongside the graph. Every
/// G*-family result is checked to be connected and d-regular.
ExtremalGraph build_extremal(const ExtremalSpec& spec);

/// Throws ErrorKind::Infeasible if (family, d, b) admits no construction.
void check_feasible(const ExtremalSpec& spec);
bool is_feasible(const ExtremalSpec& spec);

/// Vertices of degree exactly d - 1, in index order.
VertexSet deficient_vertices(const Graph& h, int d);

}  // namespace toughspec
