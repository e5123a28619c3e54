#include <random>
#include <string>
#include <utility>

#include "toughspec/certify.hpp"
#include "toughspec/error.hpp"

namespace toughspec {
namespace {

// Unbiased draw from [0, bound) using only the engine's raw output, so the
// sequence is identical across standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

void check_regular_params(int n, int d) {
  if (n < 1) throw Error(ErrorKind::Infeasible, "n must be >= 1, got " + std::to_string(n));
  if (d < 0 || d >= n)
    throw Error(ErrorKind::Infeasible, "degree must satisfy 0 <= d < n, got d=" + std::to_string(d) +
                                           " n=" + std::to_string(n));
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw Error(ErrorKind::Infeasible,
                "n·d must be even, got n=" + std::to_string(n) + " d=" + std::to_string(d));
}

Graph draw_pairing(int n, int d, std::mt19937_64& rng) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);

  for (int attempt = 0; attempt < kRandomRegularAttempts; ++attempt) {
    for (std::size_t i = points.size(); i > 1; --i)
      std::swap(points[i - 1], points[bounded(rng, i)]);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      const Vertex u = points[i];
      const Vertex v = points[i + 1];
      if (u == v || g.has_edge(u, v))
        simple = false;
      else
        g.add_edge(u, v);
    }
    if (simple) return g;
  }
  throw Error(ErrorKind::BudgetExceeded, "pairing model found no simple " + std::to_string(d) +
                                             "-regular graph on " + std::to_string(n) + " vertices in " +
                                             std::to_string(kRandomRegularAttempts) + " attempts");
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
  check_regular_params(n, d);
  std::mt19937_64 rng(seed);
  return draw_pairing(n, d, rng);
}

Graph random_connected_regular(int n, int d, std::uint64_t seed) {
  check_regular_params(n, d);
  if (d == 0 && n > 1) throw Error(ErrorKind::Infeasible, "no connected 0-regular graph on more than one vertex");
  if (d == 1 && n > 2) throw Error(ErrorKind::Infeasible, "no connected 1-regular graph on more than two vertices");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRandomRegularAttempts; ++attempt) {
    Graph g = draw_pairing(n, d, rng);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::BudgetExceeded, "no connected sample within attempt cap");
}

}  // namespace toughspec
