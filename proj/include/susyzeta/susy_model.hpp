#pragma once

// Supersymmetric model built on the ladder operators A(w), A^dagger(w).
//
// Ground state of H-:  psi_0 = |x|^{-1/2 + i(w/2 - lambda*)},  E_0 = |eta(1/2 + i lambda*)|^2
// Tower:               psi_n = (A^dagger)^n psi_0 = C_n |x|^{-1/2 + i(n w + w/2 - lambda*)}
//                      psi~_n = A psi_n = C~_n |x|^{-1/2 + i(n w - w/2 - lambda*)}
//   C_n  = prod_{m=1..n} (1 - 2^{1/2 - i(m w - lambda*)}) zeta(1/2 + i(m w - lambda*))
//   E_n  = |1 - 2^{1/2 - i(n w - lambda*)}|^2 |zeta(1/2 + i(lambda* - n w))|^2
//   C~_n = E_n C_{n-1}
//
// E_0 is evaluated, never assumed: it vanishes only when lambda* is a zero of
// zeta on the critical line.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "susyzeta/errors.hpp"
#include "susyzeta/monomial.hpp"
#include "susyzeta/zeta.hpp"

namespace susyzeta {

inline constexpr int max_tower_depth = 64;

struct ModelConfig {
  OmegaParam omega{1.0};
  double lambda_star = 0.0;
  int n_max = 8;
  SeriesConfig series{};

  void validate() const {
    if (!std::isfinite(lambda_star)) {
      throw InvalidArgument("ModelConfig: lambda_star must be finite");
    }
    if (n_max < 1 || n_max > max_tower_depth) {
      throw InvalidArgument("ModelConfig: n_max must be in [1, 64]");
    }
    series.validate();
  }
};

struct SpectrumLevel {
  int n = 0;
  cplx C{1.0};
  cplx C_tilde{0.0};
  double E = 0.0;
  double psi_rho = 0.0;
  double psi_tilde_rho = 0.0;
};

/// Relative tolerance for tower level n; C_n multiplies n zeta values so the
/// error budget grows geometrically.
inline double ladder_tolerance(int n) { return 1e-10 * std::exp2(n / 8.0); }

/// psi_0 = |x|^{-1/2 + i(w/2 - lambda*)}, even, unit amplitude.
inline MonomialState ground_state(const ModelConfig& cfg) {
  return MonomialState(0.5, cfg.omega.half() - cfg.lambda_star, Parity::even, 1.0);
}

/// E(lambda) = |1 - 2^{1/2 - i lambda}|^2 |zeta(1/2 + i lambda)|^2 >= 0.
inline double ground_energy(double lambda, const SeriesConfig& series = {}) {
  return std::norm(eta(ComplexPoint(0.5, lambda), series));
}

inline double psi_rho(const ModelConfig& cfg, int n) {
  return n * cfg.omega.value() + (cfg.omega.half() - cfg.lambda_star);
}

inline double psi_tilde_rho(const ModelConfig& cfg, int n) {
  return n * cfg.omega.value() - (cfg.omega.half() + cfg.lambda_star);
}

/// Levels 0..n_max, evaluated term by term from the closed forms for C_n and E_n.
inline std::vector<SpectrumLevel> build_spectrum(const ModelConfig& cfg) {
  cfg.validate();
  std::vector<SpectrumLevel> levels;
  levels.reserve(static_cast<std::size_t>(cfg.n_max) + 1);

  SpectrumLevel ground;
  ground.n = 0;
  ground.C = 1.0;
  ground.C_tilde = 0.0;
  ground.E = ground_energy(cfg.lambda_star, cfg.series);
  ground.psi_rho = psi_rho(cfg, 0);
  ground.psi_tilde_rho = psi_tilde_rho(cfg, 0);
  levels.push_back(ground);

  const double w = cfg.omega.value();
  for (int n = 1; n <= cfg.n_max; ++n) {
    const double t = n * w - cfg.lambda_star;
    const ComplexPoint s(0.5, t);
    const cplx factor = prefactor(s) * zeta_right(s, cfg.series);

    SpectrumLevel level;
    level.n = n;
    level.C = levels.back().C * factor;
    level.E = std::norm(prefactor(s)) * std::norm(zeta_right(ComplexPoint(0.5, -t), cfg.series));
    level.C_tilde = level.E * levels.back().C;
    level.psi_rho = psi_rho(cfg, n);
    level.psi_tilde_rho = psi_tilde_rho(cfg, n);
    levels.push_back(level);
  }
  return levels;
}

struct LevelCheck {
  int n = 0;
  double E = 0.0;
  cplx h_minus{};
  cplx h_plus{};
  double rel_deviation = 0.0;
  bool ok = true;
};

struct IsospectralReport {
  std::vector<LevelCheck> levels;
  double max_rel_deviation = 0.0;
  double tolerance = 1e-10;

  bool ok() const {
    for (const auto& l : levels) {
      if (!l.ok) return false;
    }
    return true;
  }
};

namespace detail {

inline double rel_diff(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace detail

/// Compares, for n >= 1, the H+ eigenvalue on psi~_n, the H- eigenvalue on
/// psi_n and E_n. Reports every level; does not throw on mismatch.
inline IsospectralReport check_isospectral(const ModelConfig& cfg, double tolerance = 1e-10) {
  const auto levels = build_spectrum(cfg);
  IsospectralReport report;
  report.tolerance = tolerance;
  for (const auto& level : levels) {
    if (level.n == 0) continue;
    LevelCheck check;
    check.n = level.n;
    check.E = level.E;
    check.h_minus = eigenvalue_H_minus(0.5, level.psi_rho, cfg.omega, cfg.series);
    check.h_plus = eigenvalue_H_plus(0.5, level.psi_tilde_rho, cfg.omega, cfg.series);
    check.rel_deviation = std::max({detail::rel_diff(check.h_minus, check.h_plus),
                                    detail::rel_diff(check.h_minus, level.E),
                                    detail::rel_diff(check.h_plus, level.E)});
    check.ok = check.rel_deviation <= tolerance;
    report.max_rel_deviation = std::max(report.max_rel_deviation, check.rel_deviation);
    report.levels.push_back(check);
  }
  return report;
}

/// As check_isospectral, but throws ToleranceExceeded at the first bad level.
inline IsospectralReport verify_isospectral(const ModelConfig& cfg, double tolerance = 1e-10) {
  auto report = check_isospectral(cfg, tolerance);
  for (const auto& l : report.levels) {
    if (!l.ok) {
      throw ToleranceExceeded("isospectrality violated at level " + std::to_string(l.n) +
                                  " (rel deviation " + std::to_string(l.rel_deviation) + ")",
                              l.n);
    }
  }
  return report;
}

/// Two-component wavefunction: top in the H- sector, bottom in the H+ sector.
class DoubletState {
 public:
  DoubletState(MonomialState top, MonomialState bottom) : top_(top), bottom_(bottom) {
    if (top.sigma() != bottom.sigma() || top.parity() != bottom.parity()) {
      throw InvalidArgument("DoubletState: components must share sigma and parity");
    }
  }

  const MonomialState& top() const noexcept { return top_; }
  const MonomialState& bottom() const noexcept { return bottom_; }

 private:
  MonomialState top_;
  MonomialState bottom_;
};

/// Q = [[0, 0], [A, 0]]: (top, bottom) -> (0, A top).
inline DoubletState apply_Q(const OmegaParam& omega, const DoubletState& d,
                            const SeriesConfig& cfg = {}) {
  return {d.top().zero(), apply_A(omega, d.top(), cfg)};
}

/// Q^dagger = [[0, A^dagger], [0, 0]]: (top, bottom) -> (A^dagger bottom, 0).
inline DoubletState apply_Q_dagger(const OmegaParam& omega, const DoubletState& d,
                                   const SeriesConfig& cfg = {}) {
  return {apply_A_dagger(omega, d.bottom(), cfg), d.bottom().zero()};
}

/// H = diag(H-, H+).
inline DoubletState apply_H(const OmegaParam& omega, const DoubletState& d,
                            const SeriesConfig& cfg = {}) {
  return {apply_H_minus(omega, d.top(), cfg), apply_H_plus(omega, d.bottom(), cfg)};
}

inline DoubletState add(const DoubletState& a, const DoubletState& b) {
  return {add(a.top(), b.top()), add(a.bottom(), b.bottom())};
}

inline DoubletState subtract(const DoubletState& a, const DoubletState& b) {
  return {subtract(a.top(), b.top()), subtract(a.bottom(), b.bottom())};
}

/// Exponent of |x| kept symbolically as  re + i (w_coeff * w + lambda_coeff * lambda*).
/// Coefficients are dyadic, so the arithmetic on them is exact.
struct ExponentForm {
  double re = 0.0;
  double omega_coeff = 0.0;
  double lambda_coeff = 0.0;

  ExponentForm operator+(const ExponentForm& o) const {
    return {re + o.re, omega_coeff + o.omega_coeff, lambda_coeff + o.lambda_coeff};
  }
  ExponentForm operator-() const { return {-re, -omega_coeff, -lambda_coeff}; }

  cplx evaluate(double omega, double lambda_star) const {
    double im = 0.0;
    if (omega_coeff != 0.0) im += omega_coeff * omega;
    if (lambda_coeff != 0.0) im += lambda_coeff * lambda_star;
    return {re, im};
  }
};

struct BOperatorResult {
  double eigenvalue = 0.0;            // eigenvalue of B on psi_0
  cplx scale_generator_eigenvalue{};  // eigenvalue of x d/dx on psi_0
};

/// B = i |x|^{-(1 - i w)/2} (x d/dx) |x|^{(1 - i w)/2} acting on psi_0.
/// Conjugating by |x|^{a} shifts the exponent by a before x d/dx reads it off,
/// so the eigenvalue is i * (exponent(psi_0) + a), computed on exact labels.
inline BOperatorResult b_operator_check(const ModelConfig& cfg) {
  const ExponentForm ground{-0.5, 0.5, -1.0};    // -1/2 + i(w/2 - lambda*)
  const ExponentForm similarity{0.5, -0.5, 0.0};  // (1 - i w)/2
  const double w = cfg.omega.value();

  const cplx shifted = (ground + similarity).evaluate(w, cfg.lambda_star);
  BOperatorResult out;
  out.eigenvalue = (cplx{0.0, 1.0} * shifted).real();
  out.scale_generator_eigenvalue = ground.evaluate(w, cfg.lambda_star);
  return out;
}

}  // namespace susyzeta
