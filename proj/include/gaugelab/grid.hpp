#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gaugelab/errors.hpp"

namespace gaugelab {

/// Uniform tensor grid on the rectangle [0,lx] x [0,ly].
///
/// Node (i,j) sits at (i*hx, j*hy) with 0 <= i < nx, 0 <= j < ny.
/// Flat storage is row-major with x fastest: index = j*nx + i.
/// Boundary nodes are traversed counterclockwise starting at the origin
/// corner: bottom edge left to right, right edge bottom to top, top edge
/// right to left, left edge top to bottom.
class Grid2D {
 public:
  Grid2D(int nx, int ny, double lx, double ly)
      : nx_(nx), ny_(ny), lx_(lx), ly_(ly) {
    if (nx < 5 || ny < 5) throw ConfigError("Grid2D: need at least 5 nodes per axis");
    if (!(lx > 0.0) || !(ly > 0.0)) throw ConfigError("Grid2D: side lengths must be positive");
    hx_ = lx / (nx - 1);
    hy_ = ly / (ny - 1);
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double hmax() const { return std::max(hx_, hy_); }

  double x(int i) const { return i * hx_; }
  double y(int j) const { return j * hy_; }

  int node_count() const { return nx_ * ny_; }
  int interior_count() const { return (nx_ - 2) * (ny_ - 2); }
  int boundary_count() const { return 2 * nx_ + 2 * ny_ - 4; }

  int node_index(int i, int j) const { return j * nx_ + i; }

  bool is_boundary(int i, int j) const {
    return i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1;
  }

  /// Flat index over interior nodes only, row-major with x fastest.
  int interior_index(int i, int j) const { return (j - 1) * (nx_ - 2) + (i - 1); }

  std::pair<int, int> interior_node(int k) const {
    return {1 + k % (nx_ - 2), 1 + k / (nx_ - 2)};
  }

  /// Position of boundary node (i,j) in the counterclockwise traversal.
  int boundary_index(int i, int j) const {
    if (j == 0) return i;
    if (i == nx_ - 1) return (nx_ - 1) + j;
    if (j == ny_ - 1) return (nx_ - 1) + (ny_ - 1) + (nx_ - 1 - i);
    return 2 * (nx_ - 1) + (ny_ - 1) + (ny_ - 1 - j);
  }

  std::pair<int, int> boundary_node(int k) const {
    if (k < nx_ - 1) return {k, 0};
    k -= nx_ - 1;
    if (k < ny_ - 1) return {nx_ - 1, k};
    k -= ny_ - 1;
    if (k < nx_ - 1) return {nx_ - 1 - k, ny_ - 1};
    k -= nx_ - 1;
    return {0, ny_ - 1 - k};
  }

  /// Arclength along the boundary traversal, zero at the origin corner.
  double boundary_arclength(int k) const {
    auto [i, j] = boundary_node(k);
    if (j == 0) return i * hx_;
    if (i == nx_ - 1) return lx_ + j * hy_;
    if (j == ny_ - 1) return lx_ + ly_ + (nx_ - 1 - i) * hx_;
    return 2 * lx_ + ly_ + (ny_ - 1 - j) * hy_;
  }

  double perimeter() const { return 2 * (lx_ + ly_); }

  /// Halved mesh step with coincident nodes: nx -> 2*nx - 1.
  Grid2D refined() const { return Grid2D(2 * nx_ - 1, 2 * ny_ - 1, lx_, ly_); }

  bool operator==(const Grid2D& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && lx_ == o.lx_ && ly_ == o.ly_;
  }
  bool operator!=(const Grid2D& o) const { return !(*this == o); }

 private:
  int nx_, ny_;
  double lx_, ly_;
  double hx_, hy_;
};

inline void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (a != b) throw GridMismatch(std::string(what) + ": operands live on different grids");
}

/// Grid function with one value per node (interior and boundary).
class Field {
 public:
  explicit Field(const Grid2D& g, double fill = 0.0)
      : grid_(g), v_(static_cast<size_t>(g.node_count()), fill) {}

  static Field sample(const Grid2D& g, const std::function<double(double, double)>& f) {
    Field out(g);
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) out.at(i, j) = f(g.x(i), g.y(j));
    return out;
  }

  const Grid2D& grid() const { return grid_; }

  double& at(int i, int j) { return v_[static_cast<size_t>(grid_.node_index(i, j))]; }
  double at(int i, int j) const { return v_[static_cast<size_t>(grid_.node_index(i, j))]; }
  double& operator[](int k) { return v_[static_cast<size_t>(k)]; }
  double operator[](int k) const { return v_[static_cast<size_t>(k)]; }

  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

  bool all_finite() const {
    for (double x : v_)
      if (!std::isfinite(x)) return false;
    return true;
  }

  Field& operator+=(const Field& o) {
    require_same_grid(grid_, o.grid_, "Field +=");
    for (size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
  }
  Field& operator-=(const Field& o) {
    require_same_grid(grid_, o.grid_, "Field -=");
    for (size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
  }
  Field& operator*=(double c) {
    for (double& x : v_) x *= c;
    return *this;
  }

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(double c, Field a) { return a *= c; }

 private:
  Grid2D grid_;
  std::vector<double> v_;
};

/// Nodewise product.
inline Field hadamard(const Field& a, const Field& b) {
  require_same_grid(a.grid(), b.grid(), "hadamard");
  Field out = a;
  for (int k = 0; k < a.grid().node_count(); ++k) out[k] *= b[k];
  return out;
}

inline Field map(const Field& a, const std::function<double(double)>& f) {
  Field out = a;
  for (int k = 0; k < a.grid().node_count(); ++k) out[k] = f(a[k]);
  return out;
}

inline double max_norm(const Field& u) {
  double m = 0.0;
  for (double x : u.values()) m = std::max(m, std::abs(x));
  return m;
}

/// Boundary trace in traversal order.
class BoundaryField {
 public:
  explicit BoundaryField(const Grid2D& g, double fill = 0.0)
      : grid_(g), v_(static_cast<size_t>(g.boundary_count()), fill) {}

  /// Samples a function of arclength along the traversal.
  static BoundaryField sample(const Grid2D& g, const std::function<double(double)>& f) {
    BoundaryField out(g);
    for (int k = 0; k < g.boundary_count(); ++k) out[k] = f(g.boundary_arclength(k));
    return out;
  }

  const Grid2D& grid() const { return grid_; }

  double& operator[](int k) { return v_[static_cast<size_t>(k)]; }
  double operator[](int k) const { return v_[static_cast<size_t>(k)]; }
  double& at(int i, int j) { return v_[static_cast<size_t>(grid_.boundary_index(i, j))]; }
  double at(int i, int j) const { return v_[static_cast<size_t>(grid_.boundary_index(i, j))]; }

  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

  bool all_finite() const {
    for (double x : v_)
      if (!std::isfinite(x)) return false;
    return true;
  }

  BoundaryField& operator+=(const BoundaryField& o) {
    require_same_grid(grid_, o.grid_, "BoundaryField +=");
    for (size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
  }
  BoundaryField& operator-=(const BoundaryField& o) {
    require_same_grid(grid_, o.grid_, "BoundaryField -=");
    for (size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
  }
  BoundaryField& operator*=(double c) {
    for (double& x : v_) x *= c;
    return *this;
  }

  friend BoundaryField operator+(BoundaryField a, const BoundaryField& b) { return a += b; }
  friend BoundaryField operator-(BoundaryField a, const BoundaryField& b) { return a -= b; }
  friend BoundaryField operator*(double c, BoundaryField a) { return a *= c; }

 private:
  Grid2D grid_;
  std::vector<double> v_;
};

inline double max_norm(const BoundaryField& g) {
  double m = 0.0;
  for (double x : g.values()) m = std::max(m, std::abs(x));
  return m;
}

inline BoundaryField trace(const Field& u) {
  BoundaryField out(u.grid());
  for (int k = 0; k < u.grid().boundary_count(); ++k) {
    auto [i, j] = u.grid().boundary_node(k);
    out[k] = u.at(i, j);
  }
  return out;
}

/// Copy of u with its boundary nodes overwritten by g.
inline Field with_trace(const Field& u, const BoundaryField& g) {
  require_same_grid(u.grid(), g.grid(), "with_trace");
  Field out = u;
  for (int k = 0; k < u.grid().boundary_count(); ++k) {
    auto [i, j] = u.grid().boundary_node(k);
    out.at(i, j) = g[k];
  }
  return out;
}

/// Five-point Laplacian at interior nodes; boundary entries of the output
/// are set to zero.
inline Field laplacian(const Field& u) {
  const Grid2D& g = u.grid();
  Field out(g);
  const double ix2 = 1.0 / (g.hx() * g.hx());
  const double iy2 = 1.0 / (g.hy() * g.hy());
  for (int j = 1; j < g.ny() - 1; ++j)
    for (int i = 1; i < g.nx() - 1; ++i)
      out.at(i, j) = (u.at(i - 1, j) - 2 * u.at(i, j) + u.at(i + 1, j)) * ix2 +
                     (u.at(i, j - 1) - 2 * u.at(i, j) + u.at(i, j + 1)) * iy2;
  return out;
}

/// Outward normal derivative on the boundary, second-order one-sided:
/// (3 u_b - 4 u_1 + u_2) / (2 h) with u_1, u_2 the first and second nodes
/// along the inward normal. Corner nodes carry the average of the two
/// adjacent edge formulas (the continuum normal has no corner analogue;
/// this is the documented modeling choice).
inline BoundaryField normal_derivative(const Field& u) {
  const Grid2D& g = u.grid();
  BoundaryField out(g);
  const int nx = g.nx(), ny = g.ny();
  auto one_sided = [&](int i, int j, int di, int dj, double h) {
    return (3 * u.at(i, j) - 4 * u.at(i + di, j + dj) + u.at(i + 2 * di, j + 2 * dj)) / (2 * h);
  };
  for (int k = 0; k < g.boundary_count(); ++k) {
    auto [i, j] = g.boundary_node(k);
    double sum = 0.0;
    int sides = 0;
    if (j == 0) {
      sum += one_sided(i, j, 0, +1, g.hy());
      ++sides;
    }
    if (j == ny - 1) {
      sum += one_sided(i, j, 0, -1, g.hy());
      ++sides;
    }
    if (i == 0) {
      sum += one_sided(i, j, +1, 0, g.hx());
      ++sides;
    }
    if (i == nx - 1) {
      sum += one_sided(i, j, -1, 0, g.hx());
      ++sides;
    }
    out[k] = sum / sides;
  }
  return out;
}

/// Trapezoid quadrature weight of node (i,j).
inline double quadrature_weight(const Grid2D& g, int i, int j) {
  double wx = (i == 0 || i == g.nx() - 1) ? 0.5 : 1.0;
  double wy = (j == 0 || j == g.ny() - 1) ? 0.5 : 1.0;
  return wx * wy * g.hx() * g.hy();
}

/// Tensor-product trapezoid rule over the rectangle.
inline double integrate(const Field& w) {
  const Grid2D& g = w.grid();
  double s = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    double wy = (j == 0 || j == g.ny() - 1) ? 0.5 : 1.0;
    double row = 0.0;
    for (int i = 0; i < g.nx(); ++i) {
      double wx = (i == 0 || i == g.nx() - 1) ? 0.5 : 1.0;
      row += wx * w.at(i, j);
    }
    s += wy * row;
  }
  return s * g.hx() * g.hy();
}

inline double l2_norm(const Field& u) { return std::sqrt(integrate(hadamard(u, u))); }

/// Trapezoid weight of boundary node k in the closed boundary traversal.
inline double boundary_weight(const Grid2D& g, int k) {
  auto [i, j] = g.boundary_node(k);
  bool corner = (i == 0 || i == g.nx() - 1) && (j == 0 || j == g.ny() - 1);
  if (corner) return 0.5 * (g.hx() + g.hy());
  return (j == 0 || j == g.ny() - 1) ? g.hx() : g.hy();
}

/// Trapezoid rule along the closed boundary traversal.
inline double boundary_integrate(const BoundaryField& f) {
  double s = 0.0;
  for (int k = 0; k < f.grid().boundary_count(); ++k) s += boundary_weight(f.grid(), k) * f[k];
  return s;
}

inline double boundary_l2_norm(const BoundaryField& f) {
  double s = 0.0;
  for (int k = 0; k < f.grid().boundary_count(); ++k)
    s += boundary_weight(f.grid(), k) * f[k] * f[k];
  return std::sqrt(s);
}

/// Compactly supported C^2 bump: amplitude * max(0, 1 - r^2/radius^2)^3.
///
/// The support disk must keep a margin of at least 2*max(hx,hy) to the
/// boundary so the discrete one-sided normal derivative vanishes exactly.
inline Field make_bump(const Grid2D& g, double cx, double cy, double radius, double amplitude) {
  const double margin = 2.0 * g.hmax();
  if (!(radius > 0.0)) throw ConfigError("make_bump: radius must be positive");
  if (cx - radius < margin || cx + radius > g.lx() - margin || cy - radius < margin ||
      cy + radius > g.ly() - margin)
    throw InvariantViolation("make_bump: support disk touches the boundary margin");
  return Field::sample(g, [&](double x, double y) {
    double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
    double t = 1.0 - r2 / (radius * radius);
    return t > 0.0 ? amplitude * t * t * t : 0.0;
  });
}

/// Relative L2 distance over interior nodes; the denominator is the
/// interior L2 norm of the reference.
inline double relative_l2_error(const Field& recovered, const Field& truth) {
  require_same_grid(recovered.grid(), truth.grid(), "relative_l2_error");
  const Grid2D& g = recovered.grid();
  double num = 0.0, den = 0.0;
  for (int j = 1; j < g.ny() - 1; ++j)
    for (int i = 1; i < g.nx() - 1; ++i) {
      double d = recovered.at(i, j) - truth.at(i, j);
      num += d * d;
      den += truth.at(i, j) * truth.at(i, j);
    }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

}  // namespace gaugelab
