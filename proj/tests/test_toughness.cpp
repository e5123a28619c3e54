#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toughspec/certify.hpp"
#include "toughspec/constructions.hpp"
#include "toughspec/error.hpp"
#include "toughspec/toughness.hpp"

using namespace toughspec;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    if (is_connected(g) && !is_complete(g)) return g;
  }
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(4, 3).str() == "4/3");
  CHECK(Rational(2, 2).str() == "1/1");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("toughness of small graphs") {
  const auto p3 = toughness_exact(path(3));
  CHECK(p3.tau == Rational(1, 2));
  CHECK(p3.witness == VertexSet{1});
  CHECK(p3.component_count == 2);

  CHECK(toughness_exact(cycle(6)).tau == Rational(1, 1));
  CHECK(toughness_exact(petersen()).tau == Rational(4, 3));
  CHECK(toughness_exact(complete_bipartite(1, 3)).tau == Rational(1, 3));
}

TEST_CASE("toughness preconditions") {
  CHECK(kind_of([] { toughness_exact(complete(4)); }) == ErrorKind::UndefinedToughness);
  CHECK(kind_of([] { toughness_exact(edgeless(3)); }) == ErrorKind::UndefinedToughness);
  CHECK(kind_of([] { toughness_exact(cycle(31)); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { toughness_exact(petersen(), SearchBudget{30, 10}); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { is_one_over_b_tough(complete(5), 1); }) == ErrorKind::UndefinedToughness);
  CHECK(kind_of([] { is_one_over_b_tough(cycle(5), 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("known closed forms") {
  for (int m = 2; m <= 5; ++m)
    for (int n = m; n <= 5; ++n) CHECK(toughness_exact(complete_bipartite(m, n)).tau == Rational(m, n));
  for (int n = 4; n <= 12; ++n) CHECK(toughness_exact(cycle(n)).tau == Rational(1, 1));
}

TEST_CASE("1/b-toughness decisions") {
  CHECK(is_one_over_b_tough(cycle(6), 1).tough);
  const auto star = is_one_over_b_tough(complete_bipartite(1, 3), 1);
  CHECK_FALSE(star.tough);
  CHECK(star.violating_set == VertexSet{0});

  const auto g4 = build_extremal({Family::G4star, 3, 2});
  const auto dec = is_one_over_b_tough(g4.graph, 2);
  CHECK_FALSE(dec.tough);
  REQUIRE(dec.violating_set);
  CHECK(*dec.violating_set == g4.hub);
  CHECK(dec.component_count == 3);
}

TEST_CASE("exact solver matches brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_connected(n, 0.45, rng);
    const auto result = toughness_exact(g);
    const auto [s, c] = oracle::brute_force_toughness(g);
    CHECK(result.tau == Rational(s, c));
    // The witness reproduces tau when re-evaluated independently.
    CHECK(result.component_count == components_after_deletion(g, result.witness));
    CHECK(Rational(static_cast<std::int64_t>(result.witness.size()), result.component_count) == result.tau);
    for (int b = 1; b <= 3; ++b) {
      const auto dec = is_one_over_b_tough(g, b);
      CHECK(dec.tough == (result.tau >= Rational(1, b)));
      if (!dec.tough) {
        const int cc = components_after_deletion(g, *dec.violating_set);
        CHECK(cc >= b * static_cast<int>(dec.violating_set->size()) + 1);
      }
    }
  }
}

TEST_CASE("witness is the first minimiser in size-then-lex order") {
  // C6: {0,2} and {0,3} and others all reach 2/2; size-1 sets are not cuts.
  const auto r = toughness_exact(cycle(6));
  CHECK(r.witness == VertexSet{0, 2});
}

TEST_CASE("pruning bound is sound") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const Graph g = random_connected(n, 0.5, rng);
    const auto adj = oracle::adjacency_lists(g);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<bool> removed(static_cast<std::size_t>(n));
      int k = 0;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) removed[static_cast<std::size_t>(v)] = true, ++k;
      CHECK(oracle::count_components(adj, removed) <= n - k);
    }
  }
}

TEST_CASE("component census") {
  const ThresholdParams p31 = ThresholdParams::make(3, 1);
  const auto g1 = build_extremal({Family::G1star, 3, 1});
  const auto rows = component_census(g1.graph, g1.hub, p31, CensusMode::Phi);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.order == 4);
    CHECK(row.twice_edges == 10);
    CHECK(row.edges_to_cut == 2);
    CHECK(row.expected_order == 4);
    CHECK(row.expected_twice_edges == 10);
    CHECK(row.order_matches);
    CHECK(row.edges_match);
  }

  const auto g4 = build_extremal({Family::G4star, 3, 2});
  const auto rows4 = component_census(g4.graph, g4.hub, ThresholdParams::make(3, 2), CensusMode::Phi);
  REQUIRE(rows4.size() == 3);
  for (const auto& row : rows4) {
    CHECK(row.order == 5);
    CHECK(row.twice_edges == 14);
    CHECK(row.edges_to_cut == 1);
    CHECK(row.order_matches);
    CHECK(row.edges_match);
  }

  // Removing one vertex of the Petersen graph leaves one component with 3
  // edges to the cut, which does not qualify for c = 3.
  CHECK(component_census(petersen(), VertexSet{0}, p31, CensusMode::Phi).empty());
  CHECK_THROWS_AS(component_census(path(3), VertexSet{1}, p31, CensusMode::Phi), Error);
  CHECK_THROWS_AS(component_census(petersen(), VertexSet{}, p31, CensusMode::Phi), Error);
}

TEST_CASE("psi census rows") {
  // G4star(3,2) with d = b + 1: e(S,H) = 1 <= d - b = 1.
  const auto g4 = build_extremal({Family::G4star, 3, 2});
  const auto rows = component_census(g4.graph, g4.hub, ThresholdParams::make(3, 2), CensusMode::Psi);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.order == 5);
    // same parity, b even: d(d+2) - d + b = 15 - 3 + 2 = 14
    CHECK(row.expected_twice_edges == 14);
    CHECK(row.edges_match);
  }
}

TEST_CASE("constructions with n <= 24 are not 1/b-tough") {
  for (const ExtremalSpec spec : {ExtremalSpec{Family::G1star, 3, 1}, ExtremalSpec{Family::G3star, 4, 1},
                                  ExtremalSpec{Family::G4star, 3, 2}}) {
    const auto ex = build_extremal(spec);
    const auto r = toughness_exact(ex.graph);
    const auto c = ThresholdParams::make(spec.d, spec.b).c;
    CHECK(r.tau <= Rational(c - 1, spec.d));
    CHECK(r.tau < Rational(1, spec.b));
  }
}
