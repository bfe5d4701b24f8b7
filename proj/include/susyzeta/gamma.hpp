#pragma once

// Complex gamma function, Lanczos approximation (g = 7, 9 coefficients).
// Relative accuracy is about 1e-15 on the right half plane; the left half
// plane is reached through the reflection formula.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace susyzeta {

using cplx = std::complex<double>;

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series for Re z >= 0.5, with z already shifted by -1.
inline cplx lanczos_sum(cplx zm1) {
  cplx x = lanczos_coeffs[0];
  for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) {
    x += lanczos_coeffs[i] / (zm1 + static_cast<double>(i));
  }
  return x;
}

// log|sin(pi z)|, safe against cosh overflow for large |Im z|.
inline double log_abs_sin_pi(cplx z) {
  const double y = std::numbers::pi * std::abs(z.imag());
  if (y > 30.0) {
    return y - std::numbers::ln2;
  }
  return std::log(std::abs(std::sin(std::numbers::pi * z)));
}

}  // namespace detail

/// Complex Gamma(z). Poles at non-positive integers produce inf/nan.
inline cplx gamma(cplx z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    return pi / (std::sin(pi * z) * gamma(1.0 - z));
  }
  const cplx zm1 = z - 1.0;
  const cplx t = zm1 + detail::lanczos_g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * detail::lanczos_sum(zm1);
}

/// log|Gamma(z)|, without the overflow/underflow of going through gamma().
inline double log_abs_gamma(cplx z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    return std::log(pi) - detail::log_abs_sin_pi(z) - log_abs_gamma(1.0 - z);
  }
  const cplx zm1 = z - 1.0;
  const cplx t = zm1 + detail::lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + ((zm1 + 0.5) * std::log(t)).real() - t.real() +
         std::log(std::abs(detail::lanczos_sum(zm1)));
}

/// A branch of log Gamma(z) for Re z >= 0.5. Only exp() of the result is
/// branch independent; callers needing the principal branch must unwrap.
inline cplx log_gamma_right(cplx z) {
  const cplx zm1 = z - 1.0;
  const cplx t = zm1 + detail::lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(zm1));
}

}  // namespace susyzeta
