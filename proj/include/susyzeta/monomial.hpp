#pragma once

// Wavefunctions c |x|^{-sigma + i rho} held as exponent labels plus an
// amplitude, and the exact action of the scale-transformation operators on
// them:
//
//   O        x^{-s} = (1 - 2^{1-s}) zeta(s)   x^{-s} = eta(s)   x^{-s}
//   O^dagger x^{-s} = (1 - 2^{s})   zeta(1-s) x^{-s} = eta(1-s) x^{-s}
//   A(w)        = |x|^{-iw/2} O        |x|^{-iw/2}     (rho -> rho - w)
//   A^dagger(w) = |x|^{+iw/2} O^dagger |x|^{+iw/2}     (rho -> rho + w)
//   H- = A^dagger A,  H+ = A A^dagger                  (diagonal)
//
// with s = sigma - i rho. The prefactor-times-zeta products are evaluated as
// eta directly, which is the same number without the 1/(1 - 2^{1-s}) round trip.

#include <cmath>
#include <complex>
#include <string>

#include "susyzeta/errors.hpp"
#include "susyzeta/zeta.hpp"

namespace susyzeta {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Real, nonzero scale-step parameter of the ladder operators.
class OmegaParam {
 public:
  explicit OmegaParam(double omega) : omega_(omega) {
    if (!std::isfinite(omega) || omega == 0.0) {
      throw InvalidArgument("OmegaParam: omega must be finite and nonzero");
    }
  }

  /// Complex input is accepted only when it is real; a complex omega breaks
  /// self-adjointness of the partner Hamiltonians.
  static OmegaParam from_complex(cplx omega) {
    if (omega.imag() != 0.0) {
      throw InvalidArgument("OmegaParam: omega must be real");
    }
    return OmegaParam(omega.real());
  }

  double value() const noexcept { return omega_; }
  double half() const noexcept { return omega_ / 2.0; }

 private:
  double omega_;
};

/// coeff * |x|^{-sigma + i rho} (times sgn(x) for odd parity), 0 < sigma < 1.
class MonomialState {
 public:
  MonomialState(double sigma, double rho, Parity parity = Parity::even, cplx coeff = 1.0)
      : sigma_(sigma), rho_(rho), parity_(parity), coeff_(coeff) {
    if (!(sigma > 0.0 && sigma < 1.0)) {
      throw DomainError("MonomialState: sigma must lie in the open strip (0, 1)");
    }
    if (!std::isfinite(rho) || !std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) {
      throw InvalidArgument("MonomialState: rho and coeff must be finite");
    }
  }

  double sigma() const noexcept { return sigma_; }
  double rho() const noexcept { return rho_; }
  Parity parity() const noexcept { return parity_; }
  cplx coeff() const noexcept { return coeff_; }
  bool is_zero() const noexcept { return coeff_ == cplx{0.0, 0.0}; }

  /// Exponent -sigma + i rho of |x|.
  cplx exponent() const noexcept { return {-sigma_, rho_}; }

  MonomialState with_coeff(cplx c) const { return {sigma_, rho_, parity_, c}; }
  MonomialState with_rho(double r) const { return {sigma_, r, parity_, coeff_}; }
  MonomialState scaled(cplx k) const { return with_coeff(coeff_ * k); }
  MonomialState zero() const { return with_coeff(0.0); }

 private:
  double sigma_;
  double rho_;
  Parity parity_;
  cplx coeff_;
};

/// Multiplies by |x|^{i delta}: rho -> rho + delta.
inline MonomialState shift(const MonomialState& state, double delta) {
  return state.with_rho(state.rho() + delta);
}

// Scalar multipliers. Each takes the rho label the operator acts on.

/// O on |x|^{-sigma+i rho}: eta(sigma - i rho).
inline cplx o_multiplier(double sigma, double rho, const SeriesConfig& cfg = {}) {
  return eta(ComplexPoint(sigma, -rho), cfg);
}

/// O^dagger on |x|^{-sigma+i rho}: eta(1 - sigma + i rho).
inline cplx o_dagger_multiplier(double sigma, double rho, const SeriesConfig& cfg = {}) {
  return eta(ComplexPoint(1.0 - sigma, rho), cfg);
}

/// A(w): (1 - 2^{(1-sigma) + i(rho - w/2)}) zeta(sigma - i(rho - w/2)).
inline cplx a_multiplier(double sigma, double rho, const OmegaParam& omega,
                         const SeriesConfig& cfg = {}) {
  return o_multiplier(sigma, rho - omega.half(), cfg);
}

/// A^dagger(w): (1 - 2^{sigma - i(rho + w/2)}) zeta(1 - sigma + i(rho + w/2)).
inline cplx a_dagger_multiplier(double sigma, double rho, const OmegaParam& omega,
                                const SeriesConfig& cfg = {}) {
  return o_dagger_multiplier(sigma, rho + omega.half(), cfg);
}

/// H- eigenvalue on |x|^{-sigma+i rho}: both factors at u = rho - w/2.
inline cplx eigenvalue_H_minus(double sigma, double rho, const OmegaParam& omega,
                               const SeriesConfig& cfg = {}) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("eigenvalue_H_minus: sigma must lie in (0, 1)");
  }
  const double u = rho - omega.half();
  return o_dagger_multiplier(sigma, u, cfg) * o_multiplier(sigma, u, cfg);
}

/// H+ eigenvalue on |x|^{-sigma+i rho}: both factors at u = rho + w/2.
inline cplx eigenvalue_H_plus(double sigma, double rho, const OmegaParam& omega,
                              const SeriesConfig& cfg = {}) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("eigenvalue_H_plus: sigma must lie in (0, 1)");
  }
  const double u = rho + omega.half();
  return o_dagger_multiplier(sigma, u, cfg) * o_multiplier(sigma, u, cfg);
}

// Operator actions. Zero-coefficient states are absorbing: labels move as
// usual but no series is evaluated.

inline MonomialState apply_O(const MonomialState& state, const SeriesConfig& cfg = {}) {
  if (state.is_zero()) return state;
  return state.scaled(o_multiplier(state.sigma(), state.rho(), cfg));
}

inline MonomialState apply_O_dagger(const MonomialState& state, const SeriesConfig& cfg = {}) {
  if (state.is_zero()) return state;
  return state.scaled(o_dagger_multiplier(state.sigma(), state.rho(), cfg));
}

inline MonomialState apply_A(const OmegaParam& omega, const MonomialState& state,
                             const SeriesConfig& cfg = {}) {
  const MonomialState moved = state.with_rho(state.rho() - omega.value());
  if (state.is_zero()) return moved;
  return moved.scaled(a_multiplier(state.sigma(), state.rho(), omega, cfg));
}

inline MonomialState apply_A_dagger(const OmegaParam& omega, const MonomialState& state,
                                    const SeriesConfig& cfg = {}) {
  const MonomialState moved = state.with_rho(state.rho() + omega.value());
  if (state.is_zero()) return moved;
  return moved.scaled(a_dagger_multiplier(state.sigma(), state.rho(), omega, cfg));
}

inline MonomialState apply_H_minus(const OmegaParam& omega, const MonomialState& state,
                                   const SeriesConfig& cfg = {}) {
  if (state.is_zero()) return state;
  return state.scaled(eigenvalue_H_minus(state.sigma(), state.rho(), omega, cfg));
}

inline MonomialState apply_H_plus(const OmegaParam& omega, const MonomialState& state,
                                  const SeriesConfig& cfg = {}) {
  if (state.is_zero()) return state;
  return state.scaled(eigenvalue_H_plus(state.sigma(), state.rho(), omega, cfg));
}

/// Labels agree: same sigma and parity, rho equal up to rounding of label
/// arithmetic (a few ulps after +w then -w).
inline bool same_labels(const MonomialState& a, const MonomialState& b) {
  return a.sigma() == b.sigma() && a.parity() == b.parity() &&
         std::abs(a.rho() - b.rho()) <= 1e-12 * std::max(1.0, std::abs(a.rho()));
}

/// Sum of two monomials. A zero-coefficient operand is the identity element;
/// otherwise the labels must match.
inline MonomialState add(const MonomialState& a, const MonomialState& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (!same_labels(a, b)) {
    throw InvalidArgument("add: monomials with different exponents are not representable");
  }
  return a.with_coeff(a.coeff() + b.coeff());
}

inline MonomialState subtract(const MonomialState& a, const MonomialState& b) {
  return add(a, b.scaled(-1.0));
}

}  // namespace susyzeta
