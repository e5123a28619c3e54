#include "toughspec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "toughspec/error.hpp"

namespace toughspec {

SquareMatrix::SquareMatrix(int n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (n < 0 || data_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw invalid_argument("matrix data does not match size " + std::to_string(n));
}

SquareMatrix adjacency_matrix(const Graph& g) {
  SquareMatrix a(g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

std::vector<double> symmetric_eigenvalues(SquareMatrix a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw invalid_argument("matrix is not symmetric");

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };
  double scale = 0.0;
  for (double x : a.data()) scale += x * x;
  scale = std::sqrt(scale);

  constexpr int kMaxSweeps = 100;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= eps * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Skip rotations that no longer change the diagonal in floating point.
        if (sweep > 3 && std::abs(apq) <= eps * 1e-2 * (std::abs(a(p, p)) + std::abs(a(q, q)))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          a(r, p) = a(p, r) = new_rp;
          a(r, q) = a(q, r) = new_rq;
        }
      }
    }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return values;
}

Spectrum eigenvalues(const Graph& g) {
  if (g.order() == 0) throw invalid_argument("spectrum of the empty graph is undefined");
  return Spectrum{symmetric_eigenvalues(adjacency_matrix(g)), kSpectralTol};
}

double lambda_k(const Spectrum& s, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > s.size())
    throw invalid_argument("eigenvalue index " + std::to_string(k) + " out of range 1.." +
                           std::to_string(s.size()));
  return s.values[static_cast<std::size_t>(k - 1)];
}

double lambda_k(const Graph& g, int k) { return lambda_k(eigenvalues(g), k); }

double spectral_radius(const Graph& g) { return lambda_k(g, 1); }

void validate_partition(const Graph& g, const Partition& p) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) throw invalid_argument("partition block " + std::to_string(b) + " is empty");
    for (Vertex v : p.blocks[b]) {
      if (v >= g.order())
        throw invalid_argument("partition vertex " + std::to_string(v) + " out of range");
      if (owner[v] >= 0)
        throw invalid_argument("vertex " + std::to_string(v) + " appears in two blocks");
      owner[v] = static_cast<int>(b);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (owner[v] < 0) throw invalid_argument("vertex " + std::to_string(v) + " not covered by partition");
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  validate_partition(g, p);
  const int m = static_cast<int>(p.blocks.size());
  std::vector<int> owner(static_cast<std::size_t>(g.order()));
  for (int b = 0; b < m; ++b)
    for (Vertex v : p.blocks[b]) owner[v] = b;

  QuotientMatrix q{SquareMatrix(m), true};
  std::vector<int> counts(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<int> first;
    for (Vertex v : p.blocks[i]) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(v)) ++counts[owner[w]];
      if (first.empty())
        first = counts;
      else if (counts != first)
        q.equitable = false;
      for (int j = 0; j < m; ++j) q.entries(i, j) += counts[j];
    }
    const auto size = static_cast<double>(p.blocks[i].size());
    for (int j = 0; j < m; ++j) q.entries(i, j) /= size;
  }
  return q;
}

bool check_interlacing(const Spectrum& outer, std::span<const double> inner) {
  const std::size_t n = outer.size();
  const std::size_t m = inner.size();
  if (m > n)
    throw invalid_argument("cannot interlace " + std::to_string(m) + " values into a spectrum of " +
                           std::to_string(n));
  std::vector<double> mu(inner.begin(), inner.end());
  std::sort(mu.begin(), mu.end(), std::greater<>());
  for (std::size_t i = 0; i < m; ++i) {
    if (mu[i] > outer.values[i] + outer.tol) return false;
    if (mu[i] < outer.values[n - m + i] - outer.tol) return false;
  }
  return true;
}

std::vector<double> eigenvalues_small_matrix(const SquareMatrix& m, bool require_real) {
  const int n = m.size();
  if (n == 0) return {};
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::NonRealSpectrum, "eigenvalue iteration did not converge");

  const double imag_tol = 1e-8 * std::max(1.0, a.norm());
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  for (const auto& z : solver.eigenvalues()) {
    if (require_real && std::abs(z.imag()) > imag_tol)
      throw Error(ErrorKind::NonRealSpectrum,
                  "matrix has a non-real eigenvalue with imaginary part " + std::to_string(z.imag()));
    values.push_back(z.real());
  }
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace toughspec
