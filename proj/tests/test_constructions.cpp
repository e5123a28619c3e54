#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "toughspec/constructions.hpp"
#include "toughspec/error.hpp"
#include "toughspec/spectral.hpp"
#include "toughspec/thresholds.hpp"
#include "toughspec/toughness.hpp"

using namespace toughspec;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("H(d, b) branches") {
  const Graph h32 = build_H(3, 2);
  CHECK(h32.order() == 5);
  CHECK(h32.edge_count() == 7);
  CHECK(degree_sequence(h32) == std::vector<int>{3, 3, 3, 3, 2});

  const Graph h31 = build_H(3, 1);
  CHECK(degree_sequence(h31) == std::vector<int>{3, 3, 2, 2});
  Graph k4_minus_edge = complete(4);
  k4_minus_edge.remove_edge(2, 3);
  CHECK(h31 == k4_minus_edge);

  const Graph h41 = build_H(4, 1);
  CHECK(h41.order() == 5);
  CHECK(degree_sequence(h41) == std::vector<int>{4, 4, 4, 3, 3});

  // c = 4, d = 7: complement(C3) v cocktail(3)
  const Graph h72 = build_H(7, 2);
  CHECK(h72.order() == 9);
  CHECK(deficient_vertices(h72, 7).size() == 3);

  CHECK(kind_of([] { build_H(4, 2); }) == ErrorKind::Infeasible);  // c = 2 with d even
}

TEST_CASE("deficient vertices") {
  CHECK(deficient_vertices(build_H(3, 2), 3).size() == 1);
  CHECK(deficient_vertices(complete(4), 3).empty());
  CHECK(deficient_vertices(build_H(3, 1), 3).size() == 2);
  CHECK(deficient_vertices(build_H(3, 1), 3) == VertexSet{2, 3});
}

TEST_CASE("G1star") {
  const Graph g31 = build_G1star(3, 1);
  CHECK(g31.order() == 14);
  CHECK(is_regular(g31) == 3);
  CHECK(is_connected(g31));
  CHECK(std::abs(lambda_k(g31, 2) - (1 + std::sqrt(17.0)) / 2) < 1e-6);

  const Graph g51 = build_G1star(5, 1);
  CHECK(g51.order() == 34);
  CHECK(is_regular(g51) == 5);
  CHECK(is_connected(g51));
}

TEST_CASE("G2star, G3star, G4star") {
  const Graph g4 = build_G4star(3, 2);
  CHECK(g4.order() == 16);
  CHECK(is_regular(g4) == 3);
  CHECK(std::abs(lambda_k(g4, 2) - alpha_d(3)) < 1e-6);

  // H(4,1) has c - 2 = 2 deficient vertices, so the hub has 2 vertices.
  const Graph g3 = build_G3star(4, 1);
  CHECK(g3.order() == 22);
  CHECK(is_regular(g3) == 4);
  CHECK(std::abs(lambda_k(g3, 2) - (2 + std::sqrt(28.0)) / 2) < 1e-6);

  const Graph g2 = build_G2star(7, 2);
  CHECK(g2.order() == 3 + 7 * 9);
  CHECK(is_regular(g2) == 7);
  CHECK(std::abs(lambda_k(g2, 2) - phi(ThresholdParams::make(7, 2)).value) < 1e-6);

  CHECK(kind_of([] { build_G2star(5, 2); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { build_G2star(4, 1); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { build_G3star(5, 1); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { build_G4star(3, 1); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { build_G4star(4, 3); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { build_G1star(4, 1); }) == ErrorKind::Infeasible);
}

TEST_CASE("infeasibility messages name the constraint") {
  try {
    build_G2star(4, 1);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("d odd") != std::string::npos);
  }
}

TEST_CASE("every feasible construction with d <= 7 is sharp") {
  int built = 0;
  for (Family f : {Family::G1star, Family::G2star, Family::G3star, Family::G4star}) {
    for (int d = 1; d <= 7; ++d) {
      for (int b = 1; b <= d; ++b) {
        const ExtremalSpec spec{f, d, b};
        if (!is_feasible(spec)) continue;
        const auto ex = build_extremal(spec);
        ++built;
        CHECK(is_regular(ex.graph) == d);
        CHECK(is_connected(ex.graph));
        const auto params = ThresholdParams::make(d, b);
        CHECK(std::abs(lambda_k(ex.graph, 2) - phi(params).value) < 1e-6);
        // Deleting the hub leaves the d copies.
        const int c = components_after_deletion(ex.graph, ex.hub);
        CHECK(c == d);
        CHECK(Rational(static_cast<std::int64_t>(ex.hub.size()), c) < Rational(1, b));
        CHECK(c >= b * static_cast<int>(ex.hub.size()) + 1);
      }
    }
  }
  CHECK(built >= 10);
}

TEST_CASE("lambda_{b+1} of G4star at d = b + 1") {
  for (int d : {3, 5}) {
    const Graph g = build_G4star(d, d - 1);
    CHECK(std::abs(lambda_k(g, d) - alpha_d(d)) < 1e-6);
  }
}

TEST_CASE("family names") {
  CHECK(parse_family("G1star") == Family::G1star);
  CHECK(parse_family("h") == Family::H);
  CHECK(parse_family("g4") == Family::G4star);
  CHECK_THROWS_AS(parse_family("G5star"), Error);
  CHECK(to_string(Family::G3star) == "G3star");
}
