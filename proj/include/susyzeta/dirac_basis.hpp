#pragma once

// Numerical forms of the normalisability, orthogonality, completeness and
// self-adjointness statements for the monomial basis.
//
// Continuum: psi_rho(x) = x^{-1/2 + i rho} on x > 0. With x = e^u,
//   int dx psi_rho^* psi_rho' = int du e^{i (rho' - rho) u} = 2 pi delta(rho - rho'),
// tested against a Gaussian window w in rho'.
//
// Discrete: phi_n(x) = x^{-1/2 + i(C + n w)}. With z = x^{i w},
//   int dx phi_n^* phi_n' = (-i/w) oint dz / z^{1 + (n - n')} = (2 pi / w) delta_{nn'}.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "susyzeta/errors.hpp"
#include "susyzeta/monomial.hpp"
#include "susyzeta/zeta.hpp"

namespace susyzeta {

/// Gaussian window w(rho') = exp(-((rho' - center)/width)^2) / (width sqrt(pi))
/// and the half-length of the u integration range.
class SmearWindow {
 public:
  /// Boundary value of the windowed integrand targeted by the automatic cutoff.
  static constexpr double auto_boundary = 1e-12;
  /// Cutoffs leaving a boundary value above this are rejected.
  static constexpr double max_boundary = 1e-9;

  SmearWindow(double center, double width, std::optional<double> u_cutoff = std::nullopt)
      : center_(center), width_(width) {
    if (!std::isfinite(center) || !(width > 0.0) || !std::isfinite(width)) {
      throw InvalidArgument("SmearWindow: need finite center and width > 0");
    }
    // Fourier transform of the window is exp(-width^2 u^2 / 4).
    u_cutoff_ = u_cutoff.value_or(2.0 * std::sqrt(-std::log(auto_boundary)) / width);
    if (!(u_cutoff_ > 0.0)) {
      throw InvalidArgument("SmearWindow: u_cutoff must be positive");
    }
  }

  double center() const noexcept { return center_; }
  double width() const noexcept { return width_; }
  double u_cutoff() const noexcept { return u_cutoff_; }

  double operator()(double rho) const {
    const double r = (rho - center_) / width_;
    return std::exp(-r * r) / (width_ * std::sqrt(std::numbers::pi));
  }
  double boundary_value() const { return std::exp(-0.25 * width_ * width_ * u_cutoff_ * u_cutoff_); }
  SmearWindow with_cutoff(double u) const { return {center_, width_, u}; }

 private:
  double center_;
  double width_;
  double u_cutoff_;
};

/// int dx psi_rho^*(x) int drho' w(rho') psi_rho'(x), divided by 2 pi w(center).
/// Tends to w(rho)/w(center): 1 on the window centre, ~0 far from it.
///
/// The rho' integral is done in closed form (Gaussian Fourier pair); the u
/// integral uses the trapezoid rule, summed outward from u = 0 on a fixed step.
inline double smeared_inner_product(double rho, const SmearWindow& window) {
  if (window.boundary_value() > SmearWindow::max_boundary) {
    throw CutoffTooSmall("smeared_inner_product: integrand at u_cutoff is " +
                         std::to_string(window.boundary_value()));
  }
  const double offset = window.center() - rho;
  const double a = 0.25 * window.width() * window.width();
  // Step small against both the oscillation and the Gaussian scale.
  const double h = std::min(0.05 / window.width(), 0.25 / (std::abs(offset) + 1.0));
  const auto steps = static_cast<long>(std::floor(window.u_cutoff() / h));
  const auto f = [&](double u) { return std::cos(offset * u) * std::exp(-a * u * u); };

  double sum = f(0.0);
  for (long k = 1; k <= steps; ++k) {
    const double u = static_cast<double>(k) * h;
    sum += 2.0 * f(u);
  }
  const double integral = h * sum;
  return integral / (2.0 * std::numbers::pi * window(window.center()));
}

/// Trapezoid nodes on the unit circle.
class ContourGrid {
 public:
  explicit ContourGrid(int points) : points_(points) {
    if (points < 1) throw InvalidArgument("ContourGrid: points must be positive");
  }
  int points() const noexcept { return points_; }
  /// Resolves dz / z^{1+k} exactly for |k| <= max_order.
  bool resolves(int max_order) const noexcept { return points_ >= 4 * std::abs(max_order) + 4; }

 private:
  int points_;
};

/// (-i/w) oint dz / z^{1 + (n - n')} on the unit circle, anticlockwise.
inline cplx discrete_orthonormality(int n, int n_prime, const OmegaParam& omega,
                                    const ContourGrid& grid) {
  const int k = n - n_prime;
  if (!grid.resolves(k)) {
    throw InvalidArgument("discrete_orthonormality: grid needs at least 4|n-n'|+4 points");
  }
  const int N = grid.points();
  const double dtheta = 2.0 * std::numbers::pi / N;
  cplx sum = 0.0;
  for (int j = 0; j < N; ++j) {
    const double theta = j * dtheta;
    const cplx dz = cplx{0.0, dtheta} * std::polar(1.0, theta);
    sum += dz * std::polar(1.0, -(1.0 + k) * theta);
  }
  return cplx{0.0, -1.0 / omega.value()} * sum;
}

/// Matrix of discrete_orthonormality over n, n' in [0, n_max].
inline std::vector<std::vector<cplx>> orthonormality_matrix(int n_max, const OmegaParam& omega,
                                                            const ContourGrid& grid) {
  std::vector<std::vector<cplx>> m(static_cast<std::size_t>(n_max) + 1);
  for (int i = 0; i <= n_max; ++i) {
    m[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n_max) + 1);
    for (int j = 0; j <= n_max; ++j) {
      m[static_cast<std::size_t>(i)].push_back(discrete_orthonormality(i, j, omega, grid));
    }
  }
  return m;
}

/// Coefficients c_n of z^alpha f(z) = sum_n c_n phi_n(z), phi_n = z^alpha z^n,
/// projected by the Cauchy integral c_n = (1/2 pi i) oint z^{-alpha} g(z) / z^{n+1} dz
/// on `nodes` trapezoid points.
inline std::vector<cplx> basis_coefficients(std::span<const cplx> f_coeffs, int nodes) {
  const std::size_t degree_count = f_coeffs.size();
  std::vector<cplx> c(degree_count, 0.0);
  const double dtheta = 2.0 * std::numbers::pi / nodes;
  for (int j = 0; j < nodes; ++j) {
    const cplx z = std::polar(1.0, j * dtheta);
    cplx f = 0.0;
    for (std::size_t k = degree_count; k-- > 0;) f = f * z + f_coeffs[k];
    for (std::size_t n = 0; n < degree_count; ++n) {
      c[n] += f * std::polar(1.0, -static_cast<double>(n) * j * dtheta);
    }
  }
  for (auto& v : c) v /= static_cast<double>(nodes);
  return c;
}

/// Expands z^{(i/2 + C)/w} f(z) in the phi_n basis and returns the largest
/// pointwise difference between the reconstruction and direct evaluation at
/// `sample_points` points on the unit circle (z = e^{i theta}, 0 <= theta < 2 pi).
inline double completeness_reconstruction(std::span<const cplx> f_coeffs, const OmegaParam& omega,
                                          double C, int sample_points) {
  if (f_coeffs.empty() || sample_points < 1) {
    throw InvalidArgument("completeness_reconstruction: need coefficients and sample points");
  }
  const int degree = static_cast<int>(f_coeffs.size()) - 1;
  int nodes = 64;
  while (nodes < 2 * (degree + 1)) nodes *= 2;
  const auto c = basis_coefficients(f_coeffs, nodes);

  const cplx alpha = cplx{C, 0.5} / omega.value();
  double max_err = 0.0;
  for (int k = 0; k < sample_points; ++k) {
    const double theta = 2.0 * std::numbers::pi * (k + 0.5) / sample_points;
    const cplx z = std::polar(1.0, theta);
    const cplx z_alpha = std::exp(alpha * cplx{0.0, theta});

    cplx direct = 0.0;
    for (std::size_t i = f_coeffs.size(); i-- > 0;) direct = direct * z + f_coeffs[i];
    direct *= z_alpha;

    cplx recon = 0.0;
    for (int n = 0; n <= degree; ++n) {
      recon += c[static_cast<std::size_t>(n)] * z_alpha * std::polar(1.0, n * theta);
    }
    max_err = std::max(max_err, std::abs(recon - direct));
  }
  return max_err;
}

/// The two scalar prefactors of <H- psi_rho | psi_rho'> and <psi_rho | H- psi_rho'>
/// at rho' = rho, the common (divergent off sigma = 1/2) integral factored out.
struct SelfAdjointnessPrefactors {
  cplx left;   // conj of the H- eigenvalue, evaluated at the conjugated arguments
  cplx right;  // the H- eigenvalue
};

inline SelfAdjointnessPrefactors self_adjointness_prefactors(double sigma, double rho,
                                                             const OmegaParam& omega,
                                                             const SeriesConfig& cfg = {}) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("self_adjointness: sigma must lie in (0, 1)");
  }
  const double u = rho - omega.half();
  // (1 - 2^{sigma + iu})(1 - 2^{1 - sigma - iu}) zeta(sigma + iu) zeta(1 - sigma - iu)
  const cplx left = o_dagger_multiplier(sigma, -u, cfg) * o_multiplier(sigma, -u, cfg);
  return {left, eigenvalue_H_minus(sigma, rho, omega, cfg)};
}

/// |left - right|, which equals 2 |Im E_-|; zero only on sigma = 1/2.
inline double self_adjointness_defect(double sigma, double rho, const OmegaParam& omega,
                                      const SeriesConfig& cfg = {}) {
  const auto p = self_adjointness_prefactors(sigma, rho, omega, cfg);
  return std::abs(p.left - p.right);
}

}  // namespace susyzeta
