#pragma once

// Dirichlet eta and Riemann zeta on the complex plane.
//
//   eta(s)  = sum_{n>=1} (-1)^{n+1} n^{-s},           Re s > 0
//   zeta(s) = eta(s) / (1 - 2^{1-s}),                 Re s > 0, s != 1
//   zeta(s) = 2 (2 pi)^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s),  Re s < 1
//
// The alternating series is summed with one of three schemes, each paired
// with an a-priori error bound that selects the term count.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>

#include "susyzeta/errors.hpp"
#include "susyzeta/gamma.hpp"

namespace susyzeta {

/// A point s = sigma + i*lambda of the complex parameter plane.
class ComplexPoint {
 public:
  ComplexPoint(double sigma, double lambda) : sigma_(sigma), lambda_(lambda) {
    if (!std::isfinite(sigma) || !std::isfinite(lambda)) {
      throw InvalidArgument("ComplexPoint: components must be finite");
    }
  }
  explicit ComplexPoint(cplx s) : ComplexPoint(s.real(), s.imag()) {}

  double sigma() const noexcept { return sigma_; }
  double lambda() const noexcept { return lambda_; }
  cplx value() const noexcept { return {sigma_, lambda_}; }
  ComplexPoint conj() const noexcept { return {sigma_, -lambda_}; }
  /// The reflected point 1 - s.
  ComplexPoint reflect() const noexcept { return {1.0 - sigma_, -lambda_}; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  double sigma_;
  double lambda_;
};

enum class Acceleration { direct_partial_sums, euler_transform, cvz_alternating };

inline const char* to_string(Acceleration a) {
  switch (a) {
    case Acceleration::direct_partial_sums: return "direct_partial_sums";
    case Acceleration::euler_transform: return "euler_transform";
    case Acceleration::cvz_alternating: return "cvz_alternating";
  }
  return "?";
}

/// Truncation control for the alternating series.
struct SeriesConfig {
  double target_abs_error = 1e-14;
  std::size_t max_terms = 512;
  Acceleration acceleration = Acceleration::cvz_alternating;

  void validate() const {
    if (!(target_abs_error >= 1e-14) || !std::isfinite(target_abs_error)) {
      throw InvalidArgument("SeriesConfig: target_abs_error must be >= 1e-14");
    }
    if (max_terms < 16) {
      throw InvalidArgument("SeriesConfig: max_terms must be >= 16");
    }
  }
};

/// Guard used by zeta_right on |1 - 2^{1-s}|.
inline constexpr double prefactor_singular_threshold = 1e-12;

/// 1 - 2^{1-s}.
inline cplx prefactor(const ComplexPoint& s) {
  const double mag = std::exp2(1.0 - s.sigma());
  const double phase = s.lambda() * std::numbers::ln2;
  return {1.0 - mag * std::cos(phase), mag * std::sin(phase)};
}

namespace detail {

// n^{-s} as exp(-sigma ln n) (cos(lambda ln n) - i sin(lambda ln n)); keeps
// term(conj(s)) == conj(term(s)) bit for bit.
inline cplx power_term(double n, const ComplexPoint& s) {
  const double ln_n = std::log(n);
  const double mag = std::exp(-s.sigma() * ln_n);
  const double phase = s.lambda() * ln_n;
  return {mag * std::cos(phase), -mag * std::sin(phase)};
}

// Smallest n with log_bound_at_zero - n * log_rate <= log(target).
inline std::size_t terms_for(double log_bound_at_zero, double log_rate, double target) {
  const double need = (log_bound_at_zero - std::log(target)) / log_rate;
  return need <= 1.0 ? std::size_t{1} : static_cast<std::size_t>(std::ceil(need));
}

[[noreturn]] inline void non_convergent(const ComplexPoint& s, std::size_t need, std::size_t cap) {
  throw NonConvergent("eta(" + std::to_string(s.sigma()) + "+" + std::to_string(s.lambda()) +
                      "i): error bound needs " + std::to_string(need) + " terms, max_terms is " +
                      std::to_string(cap));
}

// Cohen-Rodriguez Villegas-Zagier, algorithm 1. With a_k = (k+1)^{-s} the
// series is a moment sequence of the complex measure (-ln x)^{s-1}/Gamma(s) dx
// on [0,1], whose total variation is Gamma(sigma)/|Gamma(s)|, giving
//   |error| <= 2 Gamma(sigma) / (|Gamma(s)| (3+sqrt 8)^n).
inline cplx eta_cvz(const ComplexPoint& s, const SeriesConfig& cfg) {
  const double log_rate = std::log(3.0 + std::sqrt(8.0));
  const double log_variation = std::lgamma(s.sigma()) - log_abs_gamma(s.value());
  const std::size_t n = terms_for(std::numbers::ln2 + log_variation, log_rate, cfg.target_abs_error);
  if (n > cfg.max_terms) non_convergent(s, n, cfg.max_terms);

  // Weights c_k / d lie in [-1, 1]; long double keeps d = cosh(n log(3+sqrt8))
  // representable well past any useful n.
  long double d = std::pow(3.0L + std::sqrt(8.0L), static_cast<long double>(n));
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L;
  long double c = -d;
  const long double nn = static_cast<long double>(n);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const long double kk = static_cast<long double>(k);
    c = b - c;
    sum += static_cast<double>(c / d) * power_term(static_cast<double>(k + 1), s);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5L) * (kk + 1.0L));
  }
  return sum;
}

// Euler transform in Borwein's binomial form: plain partial sum of n terms,
// then n more terms damped by the binomial tail 1 - 2^{-n} sum_{k<=j-n} C(n,k).
//   |error| <= (1 + |lambda|/sigma) e^{pi |lambda| / 2} / 8^n.
inline cplx eta_euler(const ComplexPoint& s, const SeriesConfig& cfg) {
  const double log_bound = std::log1p(std::abs(s.lambda()) / s.sigma()) +
                           std::numbers::pi * std::abs(s.lambda()) / 2.0;
  const std::size_t n = terms_for(log_bound, std::log(8.0), cfg.target_abs_error);
  if (2 * n > cfg.max_terms) non_convergent(s, 2 * n, cfg.max_terms);

  cplx head = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx t = power_term(static_cast<double>(j + 1), s);
    head += (j % 2 == 0) ? t : -t;
  }
  // binom(n, k) / 2^n accumulated in long double, recursively.
  cplx tail = 0.0;
  long double binom_frac = std::pow(0.5L, static_cast<long double>(n));
  long double cdf = 0.0L;
  for (std::size_t m = 0; m < n; ++m) {
    cdf += binom_frac;
    binom_frac *= static_cast<long double>(n - m) / static_cast<long double>(m + 1);
    const std::size_t j = n + m;
    const double w = static_cast<double>(1.0L - cdf);
    const cplx t = w * power_term(static_cast<double>(j + 1), s);
    tail += (j % 2 == 0) ? t : -t;
  }
  return head + tail;
}

// Plain partial sums over an even number of terms. Pairing consecutive terms,
//   |(2m-1)^{-s} - (2m)^{-s}| <= |s| int_{2m-1}^{2m} x^{-sigma-1} dx,
// so the tail after N terms is at most |s| / sigma * (N+1)^{-sigma}.
inline cplx eta_direct(const ComplexPoint& s, const SeriesConfig& cfg) {
  const double abs_s = std::abs(s.value());
  const double need = std::pow(abs_s / (s.sigma() * cfg.target_abs_error), 1.0 / s.sigma());
  if (!(need < static_cast<double>(cfg.max_terms))) {
    non_convergent(s, need > 1e18 ? std::size_t(-1) : static_cast<std::size_t>(need), cfg.max_terms);
  }
  std::size_t n = static_cast<std::size_t>(std::ceil(need));
  n += n % 2;
  cplx sum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const cplx t = power_term(static_cast<double>(k), s);
    sum += (k % 2 == 1) ? t : -t;
  }
  return sum;
}

}  // namespace detail

/// Dirichlet eta function for Re s > 0, absolute error <= cfg.target_abs_error
/// (up to floating-point rounding of the accumulated terms).
inline cplx eta(const ComplexPoint& s, const SeriesConfig& cfg = {}) {
  cfg.validate();
  if (!(s.sigma() > 0.0)) {
    throw DomainError("eta: requires Re s > 0");
  }
  switch (cfg.acceleration) {
    case Acceleration::cvz_alternating: return detail::eta_cvz(s, cfg);
    case Acceleration::euler_transform: return detail::eta_euler(s, cfg);
    case Acceleration::direct_partial_sums: return detail::eta_direct(s, cfg);
  }
  throw InvalidArgument("eta: unknown acceleration");
}

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re s > 0.
inline cplx zeta_right(const ComplexPoint& s, const SeriesConfig& cfg = {}) {
  if (!(s.sigma() > 0.0)) {
    throw DomainError("zeta_right: requires Re s > 0");
  }
  if (s.sigma() == 1.0 && s.lambda() == 0.0) {
    throw PoleError("pole at s=1");
  }
  const cplx p = prefactor(s);
  if (std::abs(p) <= prefactor_singular_threshold) {
    if (std::abs(s.value() - 1.0) < 1e-6) {
      throw PoleError("pole at s=1");
    }
    throw PrefactorSingular("zeta_right: 1 - 2^{1-s} vanishes at s=1+2 pi i k/ln 2");
  }
  return eta(s, cfg) / p;
}

namespace detail {

// Stieltjes constants gamma_0..gamma_3.
inline constexpr double stieltjes[4] = {0.57721566490153286061, -0.07281584548367672486,
                                        -0.00969036319287231848, 0.00205383442030334586};

// sin(pi s/2) * zeta(1-s) near s = 0, where sin vanishes against the pole.
// s zeta(1-s) = -1 + sum_k gamma_k s^{k+1} / k!.
inline cplx sin_times_reflected_zeta_near_origin(cplx s) {
  const cplx h = std::numbers::pi * s / 2.0;
  const cplx h2 = h * h;
  const cplx sin_over_s = (std::numbers::pi / 2.0) * (1.0 - h2 / 6.0 + h2 * h2 / 120.0);
  const cplx s_zeta = -1.0 + s * (stieltjes[0] + s * (stieltjes[1] + s * (stieltjes[2] / 2.0 +
                                                                          s * stieltjes[3] / 6.0)));
  return sin_over_s * s_zeta;
}

inline constexpr double origin_series_radius = 1e-3;

}  // namespace detail

/// zeta(s) for Re s < 1 through the functional equation.
inline cplx zeta_left(const ComplexPoint& s, const SeriesConfig& cfg = {}) {
  using std::numbers::pi;
  if (!(s.sigma() < 1.0)) {
    throw DomainError("zeta_left: requires Re s < 1");
  }
  const cplx z = s.value();
  const cplx two_pi_pow = std::exp((z - 1.0) * std::log(2.0 * pi));
  const cplx gamma_reflected = gamma(1.0 - z);
  cplx sin_zeta;
  if (std::abs(z) < detail::origin_series_radius) {
    sin_zeta = detail::sin_times_reflected_zeta_near_origin(z);
  } else {
    sin_zeta = std::sin(pi * z / 2.0) * zeta_right(s.reflect(), cfg);
  }
  return 2.0 * two_pi_pow * sin_zeta * gamma_reflected;
}

/// zeta anywhere off the pole: the eta route for Re s >= 1/2, the functional
/// equation otherwise.
inline cplx zeta(const ComplexPoint& s, const SeriesConfig& cfg = {}) {
  if (s.sigma() >= 0.5) {
    return zeta_right(s, cfg);
  }
  return zeta_left(s, cfg);
}

}  // namespace susyzeta
