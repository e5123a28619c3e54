#include <doctest.h>

#include <cmath>
#include <set>

#include "toughspec/certify.hpp"
#include "toughspec/constructions.hpp"
#include "toughspec/error.hpp"
#include "toughspec/graph6.hpp"
#include "toughspec/spectral.hpp"

using namespace toughspec;

TEST_CASE("lambda_2 certificate examples") {
  // lambda_2(C6) = 2cos(pi/3) = 1; phi(2,1) = alpha_2, root of x^3 - 4x + 1.
  const double a2 = alpha_d(2);
  CHECK(a2 > 1.0);
  const auto c6 = certify_thm3(cycle(6), 1);
  CHECK(c6.verdict == Verdict::Certified);
  CHECK(c6.d == 2);
  CHECK(std::abs(c6.eigenvalue_used - 1.0) < 1e-9);
  CHECK(std::abs(c6.margin - (a2 - 1.0)) < 1e-9);
  CHECK(c6.threshold.even_degree_alpha);

  const auto g1 = certify_thm3(build_G1star(3, 1), 1);
  CHECK(g1.verdict == Verdict::Inconclusive);
  CHECK(g1.comparison == Comparison::Boundary);
  CHECK(std::abs(g1.margin) <= kThresholdTol);

  const auto p3 = certify_thm3(path(3), 1);
  CHECK(p3.verdict == Verdict::NotApplicable);
  CHECK(p3.reason == "not_regular");
  CHECK(std::isnan(p3.eigenvalue_used));
}

TEST_CASE("lambda_{b+1} certificate examples") {
  const auto pet = certify_thm4(petersen(), 1);
  CHECK(pet.verdict == Verdict::Certified);
  CHECK(pet.eigen_index == 2);
  CHECK(std::abs(pet.margin - ((1 + std::sqrt(17.0)) / 2 - 1)) < 1e-9);

  const auto g4 = certify_thm4(build_G4star(3, 2), 2);
  CHECK(g4.eigen_index == 3);
  CHECK(g4.verdict == Verdict::Inconclusive);
  CHECK(g4.comparison == Comparison::Boundary);

  const auto e5 = certify_thm4(edgeless(5), 1);
  CHECK(e5.verdict == Verdict::NotApplicable);
  CHECK(e5.reason == "disconnected");

  // Disconnected but regular is still not applicable.
  CHECK(certify_thm3(disjoint_union(cycle(3), cycle(3)), 1).verdict == Verdict::NotApplicable);
  // K2 has only two eigenvalues, so lambda_3 does not exist.
  CHECK(certify_thm4(complete(2), 2).reason == "too_few_vertices");
  CHECK_THROWS_AS(certify_thm3(cycle(5), 0), Error);
}

TEST_CASE("cross check and records") {
  auto report = certify_thm3(petersen(), 1);
  run_cross_check(petersen(), report);
  REQUIRE(report.cross_check);
  CHECK(report.cross_check->status == CrossCheckStatus::Confirmed);
  const std::string rec = to_record(report, write_graph6(petersen()));
  CHECK(rec.starts_with("theorem=lambda2 d=3 b=1 index=2 eigenvalue=1 threshold=2.561552813 "
                        "branch=phi_odd_c comparison=below verdict=certified margin=1.561552813 "
                        "reason=- cross_check=confirmed violating=- graph6="));
  // Margin can be recomputed from stored fields.
  CHECK(std::abs(report.threshold.value - report.eigenvalue_used - report.margin) <= kThresholdTol);

  auto k4 = certify_thm3(complete(4), 1);
  CHECK(k4.verdict == Verdict::Certified);
  run_cross_check(complete(4), k4);
  CHECK(k4.cross_check->status == CrossCheckStatus::Confirmed);

  auto star = certify_thm3(path(3), 1);
  CHECK(to_record(star) ==
        "theorem=lambda2 d=0 b=1 index=2 eigenvalue=nan threshold=nan branch=- comparison=- "
        "verdict=not_applicable margin=nan reason=not_regular cross_check=none violating=- graph6=-");
}

TEST_CASE("corpus verification") {
  CHECK(to_record(verify_on_corpus(std::vector<Graph>{}, 1, Theorem::Lambda2)) ==
        "summary total=0 certified_confirmed=0 inconclusive=0 not_applicable=0 "
        "inconclusive_tough=0 inconclusive_not_tough=0 contradictions=0");

  const auto one = verify_on_corpus(std::vector<Graph>{build_G1star(3, 1)}, 1, Theorem::Lambda2);
  CHECK(one.total == 1);
  CHECK(one.inconclusive == 1);
  CHECK(one.contradictions == 0);

  // Connected cubic graphs on 4..10 vertices from the pairing model.
  std::set<std::string> seen;
  std::vector<Graph> cubic;
  for (int n = 4; n <= 10; n += 2)
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Graph g = random_connected_regular(n, 3, seed);
      if (seen.insert(write_graph6(g)).second) cubic.push_back(g);
    }
  for (Theorem t : {Theorem::Lambda2, Theorem::LambdaB1}) {
    CorpusOptions opts;
    opts.cross_check_inconclusive = true;
    const auto s = verify_on_corpus(cubic, 1, t, opts);
    CHECK(s.contradictions == 0);
    CHECK(s.total == cubic.size());
    CHECK(s.certified_confirmed + s.inconclusive + s.not_applicable == s.total);
  }
}

TEST_CASE("non-tough inputs are never certified") {
  for (const ExtremalSpec spec : {ExtremalSpec{Family::G1star, 3, 1}, ExtremalSpec{Family::G4star, 3, 2},
                                  ExtremalSpec{Family::G3star, 4, 1}}) {
    const Graph g = build_extremal(spec).graph;
    CHECK(certify_thm3(g, spec.b).verdict == Verdict::Inconclusive);
  }
}

TEST_CASE("random regular graphs") {
  CHECK(random_regular(4, 3, 1) == complete(4));
  CHECK(random_regular(4, 3, 99) == complete(4));
  const Graph two = random_regular(6, 2, 5);
  CHECK(is_regular(two) == 2);
  const Graph cubic = random_regular(10, 3, 1);
  CHECK(is_regular(cubic) == 3);
  CHECK(cubic == random_regular(10, 3, 1));
  CHECK_THROWS_AS(random_regular(11, 3, 1), Error);
  CHECK_THROWS_AS(random_regular(3, 3, 1), Error);
  const Graph conn = random_connected_regular(16, 5, 3);
  CHECK(is_regular(conn) == 5);
  CHECK(is_connected(conn));
}

TEST_CASE("theorem names") {
  CHECK(parse_theorem("3") == Theorem::Lambda2);
  CHECK(parse_theorem("thm4") == Theorem::LambdaB1);
  CHECK_THROWS_AS(parse_theorem("5"), Error);
}

TEST_CASE("contradiction diagnostic") {
  // Force a refuted certificate on a graph that sits on the boundary.
  const Graph g = build_extremal({Family::G4star, 3, 2}).graph;
  CertReport r = certify(g, 2, Theorem::Lambda2);
  CHECK(r.verdict == Verdict::Inconclusive);
  r.verdict = Verdict::Certified;
  run_cross_check(g, r);
  REQUIRE(r.cross_check->status == CrossCheckStatus::Refuted);
  const std::string text = contradiction_diagnostic(g, r);
  CHECK(text.find("not 1/2-tough") != std::string::npos);
  CHECK(text.find("graph6=" + write_graph6(g)) != std::string::npos);
  CHECK(text.find("violating cut S = {") != std::string::npos);
  CHECK(text.find("census: n_H=") != std::string::npos);

  r.cross_check.reset();
  CHECK(contradiction_diagnostic(g, r).find("violating cut") == std::string::npos);
}
