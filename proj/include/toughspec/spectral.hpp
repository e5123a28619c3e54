#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toughspec/graph.hpp"

namespace toughspec {

/// Absolute accuracy of every eigenvalue the library reports. All strict
/// threshold comparisons downstream use this same slack.
inline constexpr double kSpectralTol = 1e-9;

struct Spectrum {
  std::vector<double> values;  // descending
  double tol = kSpectralTol;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Dense row-major square matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}
  SquareMatrix(int n, std::vector<double> row_major);

  int size() const noexcept { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

SquareMatrix adjacency_matrix(const Graph& g);

struct Partition {
  std::vector<VertexSet> blocks;
};

// Throws on empty, overlapping, out-of-range or non-covering blocks.
void validate_partition(const Graph& g, const Partition& p);

struct QuotientMatrix {
  SquareMatrix entries;
  bool equitable = false;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(SquareMatrix a);

Spectrum eigenvalues(const Graph& g);

// k is 1-based: lambda_k(g, 1) is the spectral radius.
double lambda_k(const Graph& g, int k);
double lambda_k(const Spectrum& s, int k);
double spectral_radius(const Graph& g);

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// λ_i(outer) >= μ_i >= λ_{n-m+i}(outer) for every i, with slack outer.tol.
bool check_interlacing(const Spectrum& outer, std::span<const double> inner);

/// Eigenvalues of a general (possibly non-symmetric) matrix, sorted
/// descending. When require_real is set, a root whose imaginary part exceeds
/// the tolerance raises ErrorKind::NonRealSpectrum; otherwise real parts are
/// returned.
std::vector<double> eigenvalues_small_matrix(const SquareMatrix& m, bool require_real = true);

}  // namespace toughspec
