#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gaugelab/errors.hpp"
#include "gaugelab/grid.hpp"

namespace gaugelab {

/// The four nonlinearity families a(x,z): polynomials without constant
/// term, q(x)*e^z, q(x)*z*e^z and q(x)*sin(z). Coefficients are grid
/// functions; constants are expressed as constant fields.
///
/// Discrete coefficients are only required to have bounded nodal values;
/// the Holder classes of the continuum theory have no lattice counterpart.
class Nonlinearity {
 public:
  enum class Variant { polynomial, exponential, exp_times_u, sine_gordon };

  /// coeffs[k-1] is the coefficient of z^k, k = 1..N. The missing constant
  /// term makes a(x,0) = 0 automatic.
  static Nonlinearity polynomial(std::vector<Field> coeffs) {
    if (coeffs.empty()) throw ConfigError("Nonlinearity::polynomial: degree must be >= 1");
    for (size_t k = 1; k < coeffs.size(); ++k)
      require_same_grid(coeffs[0].grid(), coeffs[k].grid(), "Nonlinearity::polynomial");
    return Nonlinearity(Variant::polynomial, std::move(coeffs));
  }

  static Nonlinearity exponential(Field q) {
    return Nonlinearity(Variant::exponential, {std::move(q)});
  }
  static Nonlinearity exp_times_u(Field q) {
    return Nonlinearity(Variant::exp_times_u, {std::move(q)});
  }
  static Nonlinearity sine_gordon(Field q) {
    return Nonlinearity(Variant::sine_gordon, {std::move(q)});
  }

  Variant variant() const { return variant_; }
  bool is_polynomial() const { return variant_ == Variant::polynomial; }

  /// Polynomial degree N; 0 for the non-polynomial variants.
  int degree() const {
    return variant_ == Variant::polynomial ? static_cast<int>(fields_.size()) : 0;
  }

  const Grid2D& grid() const { return fields_[0].grid(); }

  /// Coefficient field of z^k for the polynomial variant, k = 1..N.
  const Field& coefficient(int k) const {
    if (variant_ != Variant::polynomial)
      throw WrongVariant("Nonlinearity::coefficient: not a polynomial");
    if (k < 1 || k > degree()) throw ConfigError("Nonlinearity::coefficient: k out of range");
    return fields_[static_cast<size_t>(k - 1)];
  }

  const Field& q() const {
    if (variant_ == Variant::polynomial) throw WrongVariant("Nonlinearity::q: polynomial variant");
    return fields_[0];
  }

  /// a(x_node, z).
  double eval(int node, double z) const {
    switch (variant_) {
      case Variant::polynomial: {
        // Horner over a(1..N): z*(a1 + z*(a2 + ...)).
        double acc = 0.0;
        for (int k = degree(); k >= 1; --k) acc = acc * z + fields_[static_cast<size_t>(k - 1)][node];
        return acc * z;
      }
      case Variant::exponential:
        return fields_[0][node] * std::exp(z);
      case Variant::exp_times_u:
        return fields_[0][node] * z * std::exp(z);
      case Variant::sine_gordon:
        return fields_[0][node] * std::sin(z);
    }
    return 0.0;
  }

  /// k-th z-derivative at (x_node, z), k >= 1. Closed form per variant:
  /// falling factorials for polynomials, q*e^z for the exponential,
  /// q*(z+k)*e^z for z*e^z, q*sin(z + k*pi/2) for sine-Gordon.
  double dz(int k, int node, double z) const {
    if (k < 1) throw ConfigError("Nonlinearity::dz: order must be >= 1");
    switch (variant_) {
      case Variant::polynomial: {
        const int N = degree();
        if (k > N) return 0.0;
        double acc = 0.0;
        for (int m = N; m >= k; --m) {
          double c = fields_[static_cast<size_t>(m - 1)][node];
          // m!/(m-k)! = m*(m-1)*...*(m-k+1)
          double fall = 1.0;
          for (int r = 0; r < k; ++r) fall *= (m - r);
          acc = acc * z + fall * c;
        }
        return acc;
      }
      case Variant::exponential:
        return fields_[0][node] * std::exp(z);
      case Variant::exp_times_u:
        return fields_[0][node] * (z + k) * std::exp(z);
      case Variant::sine_gordon:
        return fields_[0][node] * std::sin(z + k * M_PI / 2.0);
    }
    return 0.0;
  }

  /// Taylor fields T_k(x) = d^k_z a(x, u0(x)) for k = 1..kmax.
  std::vector<Field> taylor_fields(const Field& u0, int kmax) const {
    if (kmax < 1) throw ConfigError("Nonlinearity::taylor_fields: kmax must be >= 1");
    require_same_grid(grid(), u0.grid(), "Nonlinearity::taylor_fields");
    std::vector<Field> out;
    out.reserve(static_cast<size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
      Field t(grid());
      for (int node = 0; node < grid().node_count(); ++node) t[node] = dz(k, node, u0[node]);
      out.push_back(std::move(t));
    }
    return out;
  }

  static std::string variant_name(Variant v) {
    switch (v) {
      case Variant::polynomial: return "polynomial";
      case Variant::exponential: return "exponential";
      case Variant::exp_times_u: return "exp_times_u";
      case Variant::sine_gordon: return "sine_gordon";
    }
    return "?";
  }

 private:
  Nonlinearity(Variant v, std::vector<Field> fields) : variant_(v), fields_(std::move(fields)) {}

  Variant variant_;
  std::vector<Field> fields_;
};

}  // namespace gaugelab
