#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <vector>

#include "gaugelab/errors.hpp"
#include "gaugelab/grid.hpp"

namespace gaugelab {

/// Direct solver for the discrete Schrodinger-type Dirichlet problem
///
///   (Lap_h + diag V) u = S   at interior nodes,
///   u = g                    on the boundary,
///
/// with the five-point Laplacian. The sparse LU factorization is kept so
/// the same operator can be applied to many right-hand sides; that is the
/// hot path of every linearization and reconstruction loop.
class SchrodingerSolver {
 public:
  SchrodingerSolver(const Grid2D& g, const Field& potential) : grid_(g) {
    require_same_grid(g, potential.grid(), "SchrodingerSolver");
    const int n = g.interior_count();
    const double ix2 = 1.0 / (g.hx() * g.hx());
    const double iy2 = 1.0 / (g.hy() * g.hy());
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(5 * n));
    for (int j = 1; j < g.ny() - 1; ++j) {
      for (int i = 1; i < g.nx() - 1; ++i) {
        const int row = g.interior_index(i, j);
        trip.emplace_back(row, row, -2.0 * ix2 - 2.0 * iy2 + potential.at(i, j));
        if (i > 1) trip.emplace_back(row, g.interior_index(i - 1, j), ix2);
        if (i < g.nx() - 2) trip.emplace_back(row, g.interior_index(i + 1, j), ix2);
        if (j > 1) trip.emplace_back(row, g.interior_index(i, j - 1), iy2);
        if (j < g.ny() - 2) trip.emplace_back(row, g.interior_index(i, j + 1), iy2);
      }
    }
    A_.resize(n, n);
    A_.setFromTriplets(trip.begin(), trip.end());
    A_.makeCompressed();
    lu_.compute(A_);
    if (lu_.info() != Eigen::Success)
      throw SingularJacobian("SchrodingerSolver: sparse factorization failed");
  }

  const Grid2D& grid() const { return grid_; }
  const Eigen::SparseMatrix<double>& matrix() const { return A_; }

  /// Raw interior solve A x = rhs (interior index order).
  Eigen::VectorXd solve_interior(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd x = lu_.solve(rhs);
    if (lu_.info() != Eigen::Success || !x.allFinite())
      throw SingularJacobian("SchrodingerSolver: linear solve breakdown");
    return x;
  }

  /// Solves (Lap_h + diag V) u = S interior, u = g on the boundary.
  Field solve(const BoundaryField& g, const Field& S) const {
    require_same_grid(grid_, g.grid(), "SchrodingerSolver::solve");
    require_same_grid(grid_, S.grid(), "SchrodingerSolver::solve");
    const Grid2D& gr = grid_;
    const double ix2 = 1.0 / (gr.hx() * gr.hx());
    const double iy2 = 1.0 / (gr.hy() * gr.hy());
    Eigen::VectorXd rhs(gr.interior_count());
    for (int j = 1; j < gr.ny() - 1; ++j) {
      for (int i = 1; i < gr.nx() - 1; ++i) {
        double b = S.at(i, j);
        if (i == 1) b -= ix2 * g.at(0, j);
        if (i == gr.nx() - 2) b -= ix2 * g.at(gr.nx() - 1, j);
        if (j == 1) b -= iy2 * g.at(i, 0);
        if (j == gr.ny() - 2) b -= iy2 * g.at(i, gr.ny() - 1);
        rhs[gr.interior_index(i, j)] = b;
      }
    }
    Eigen::VectorXd x = solve_interior(rhs);
    Field u(gr);
    for (int k = 0; k < gr.boundary_count(); ++k) {
      auto [i, j] = gr.boundary_node(k);
      u.at(i, j) = g[k];
    }
    for (int j = 1; j < gr.ny() - 1; ++j)
      for (int i = 1; i < gr.nx() - 1; ++i) u.at(i, j) = x[gr.interior_index(i, j)];
    return u;
  }

  Field solve_zero_trace(const Field& S) const {
    return solve(BoundaryField(grid_), S);
  }

  /// Smallest-magnitude eigenvalue of (Lap_h + diag V) with zero trace by
  /// inverse power iteration on the stored factorization. Relative
  /// Rayleigh-quotient tolerance; throws PowerIterationStalled at the cap.
  double smallest_eigenvalue(double tol = 1e-8, int max_iter = 500) const {
    const int n = static_cast<int>(A_.rows());
    // Deterministic pseudo-random start so no eigenvector is missed by
    // symmetry.
    Eigen::VectorXd x(n);
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < n; ++k) {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      x[k] = 0.5 + static_cast<double>(s % 1000003) / 1000003.0;
    }
    x.normalize();
    double lambda_prev = 0.0;
    for (int it = 0; it < max_iter; ++it) {
      Eigen::VectorXd y = solve_interior(x);
      double ynorm = y.norm();
      if (!(ynorm > 0.0) || !std::isfinite(ynorm))
        throw PowerIterationStalled("smallest_eigenvalue: iterate degenerated");
      y /= ynorm;
      double lambda = y.dot(A_ * y);  // Rayleigh quotient of the normalized iterate
      if (it > 0 && std::abs(lambda - lambda_prev) <= tol * std::abs(lambda)) return lambda;
      lambda_prev = lambda;
      x = y;
    }
    throw PowerIterationStalled("smallest_eigenvalue: no convergence within iteration cap");
  }

 private:
  Grid2D grid_;
  Eigen::SparseMatrix<double> A_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

/// Discrete harmonic extension: solve Lap_h u = 0 with trace f.
inline Field harmonic_extension(const Grid2D& g, const BoundaryField& f) {
  SchrodingerSolver solver(g, Field(g));
  return solver.solve(f, Field(g));
}

}  // namespace gaugelab
