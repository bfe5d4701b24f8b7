#pragma once

// Critical-line zeros as the zero set of the ground-state energy
// E(lambda) = |1 - 2^{1/2 - i lambda}|^2 |zeta(1/2 + i lambda)|^2.
//
// E is non-negative and the prefactor is bounded away from zero on the
// critical line (sqrt2 - 1 <= |.| <= sqrt2 + 1), so E vanishes exactly where
// zeta does. A coarse grid flags V-shaped basins below a detection threshold;
// each basin is refined by golden-section minimisation with a final parabolic
// step and kept only if the minimum energy classifies as zero.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "susyzeta/errors.hpp"
#include "susyzeta/gamma.hpp"
#include "susyzeta/susy_model.hpp"
#include "susyzeta/zeta.hpp"

namespace susyzeta {

struct ScanConfig {
  double lambda_min = 0.0;
  double lambda_max = 60.0;
  double coarse_step = 0.05;
  double detect_threshold = 0.05;
  double refine_tol = 1e-10;
  int max_refine_iters = 200;
  /// E(lambda*) below this classifies the refined minimum as a zero.
  double accept_energy = 1e-12;

  void validate() const {
    if (!std::isfinite(lambda_min) || !std::isfinite(lambda_max) || !(lambda_min < lambda_max)) {
      throw InvalidArgument("ScanConfig: need finite lambda_min < lambda_max");
    }
    if (!(coarse_step > 0.0 && coarse_step <= 0.25)) {
      throw InvalidArgument("ScanConfig: coarse_step must be in (0, 0.25]");
    }
    if (!(detect_threshold > 0.0) || !(refine_tol > 0.0) || !(accept_energy > 0.0)) {
      throw InvalidArgument("ScanConfig: thresholds and tolerances must be positive");
    }
    if (max_refine_iters < 1) {
      throw InvalidArgument("ScanConfig: max_refine_iters must be positive");
    }
  }
};

enum class ZeroMethod { energy_min, sign_change };

inline const char* to_string(ZeroMethod m) {
  return m == ZeroMethod::energy_min ? "energy_min" : "sign_change";
}

struct ZeroRecord {
  double lambda_star = 0.0;
  double energy_at_min = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  ZeroMethod method = ZeroMethod::energy_min;
};

/// Refinement hit its iteration cap with the bracket still wider than the
/// tolerance. Records completed before the failure are carried along.
class RefinementStalled : public Error {
 public:
  RefinementStalled(const std::string& what, std::vector<ZeroRecord> partial = {})
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<ZeroRecord>& partial() const noexcept { return partial_; }
  void set_partial(std::vector<ZeroRecord> p) { partial_ = std::move(p); }

 private:
  std::vector<ZeroRecord> partial_;
};

enum class ZeroClass { zero, not_zero };

/// zero iff E(lambda) < tol.
inline ZeroClass classify(double lambda, const SeriesConfig& series, double tol) {
  return ground_energy(lambda, series) < tol ? ZeroClass::zero : ZeroClass::not_zero;
}

/// Golden-section minimisation of E on [lo, hi], then one parabolic step
/// through the three best points. Requires E(mid) below both endpoints.
inline ZeroRecord refine(double lo, double hi, const SeriesConfig& series, double tol,
                         int max_iters = 200) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("refine: need finite lo < hi");
  }
  const auto energy = [&](double x) { return ground_energy(x, series); };
  const double mid = 0.5 * (lo + hi);
  const double e_lo = energy(lo);
  const double e_hi = energy(hi);
  const double e_mid = energy(mid);
  if (!(e_mid < e_lo && e_mid < e_hi)) {
    throw NoInteriorMinimum("refine: E has no interior minimum in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = energy(c);
  double fd = energy(d);
  int iters = 0;
  while (b - a >= tol && iters < max_iters) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = energy(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = energy(d);
    }
    ++iters;
  }
  if (b - a >= tol) {
    throw RefinementStalled("refine: bracket width " + std::to_string(b - a) + " after " +
                            std::to_string(iters) + " iterations exceeds tol " +
                            std::to_string(tol));
  }

  double best = fc < fd ? c : d;
  double f_best = std::min(fc, fd);

  // Parabola through (c, fc), (m, fm), (d, fd) with m the bracket midpoint.
  const double m = 0.5 * (a + b);
  const double fm = energy(m);
  if (fm < f_best) {
    best = m;
    f_best = fm;
  }
  const double p = (m - c) * (m - c) * (fm - fd) - (m - d) * (m - d) * (fm - fc);
  const double q = (m - c) * (fm - fd) - (m - d) * (fm - fc);
  if (q != 0.0) {
    const double vertex = m - 0.5 * p / q;
    if (vertex > a && vertex < b) {
      const double fv = energy(vertex);
      if (fv < f_best) {
        best = vertex;
        f_best = fv;
      }
    }
  }

  ZeroRecord rec;
  rec.lambda_star = best;
  rec.energy_at_min = f_best;
  rec.bracket_lo = a;
  rec.bracket_hi = b;
  rec.iterations = iters;
  rec.method = ZeroMethod::energy_min;
  // Degenerate bracket at the resolution of double: widen to keep lo < lambda* < hi.
  if (!(rec.bracket_lo < best)) rec.bracket_lo = std::nextafter(best, -INFINITY);
  if (!(best < rec.bracket_hi)) rec.bracket_hi = std::nextafter(best, INFINITY);
  return rec;
}

/// Coarse grid lambda_min + i * coarse_step, closed by lambda_max.
inline std::vector<double> scan_grid(const ScanConfig& cfg) {
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(
      std::floor((cfg.lambda_max - cfg.lambda_min) / cfg.coarse_step));
  grid.reserve(count + 2);
  for (std::size_t i = 0; i <= count; ++i) {
    const double x = cfg.lambda_min + static_cast<double>(i) * cfg.coarse_step;
    if (x > cfg.lambda_max) break;
    grid.push_back(x);
  }
  if (grid.back() < cfg.lambda_max) grid.push_back(cfg.lambda_max);
  return grid;
}

/// All zeros of E in the open interval (lambda_min, lambda_max), ascending.
/// A zero whose basin minimum falls on the first or last grid point is not
/// reported.
inline std::vector<ZeroRecord> scan(const ScanConfig& cfg, const SeriesConfig& series = {}) {
  cfg.validate();
  const auto grid = scan_grid(cfg);
  std::vector<double> energy(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    energy[i] = ground_energy(grid[i], series);
  }

  std::vector<ZeroRecord> found;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const bool v_shape = energy[i] < energy[i - 1] && energy[i] < energy[i + 1];
    if (!v_shape || !(energy[i] < cfg.detect_threshold)) continue;
    try {
      ZeroRecord rec = refine(grid[i - 1], grid[i + 1], series, cfg.refine_tol, cfg.max_refine_iters);
      if (classify(rec.lambda_star, series, cfg.accept_energy) == ZeroClass::zero) {
        found.push_back(rec);
      }
    } catch (RefinementStalled& e) {
      e.set_partial(found);
      throw;
    } catch (const NoInteriorMinimum&) {
      // Grid V-shape without a midpoint V-shape: a flat or skewed shallow dip.
    }
  }
  std::sort(found.begin(), found.end(),
            [](const ZeroRecord& x, const ZeroRecord& y) { return x.lambda_star < y.lambda_star; });
  return found;
}

/// Riemann-Siegel theta modulo 2 pi: Im log Gamma(1/4 + i t/2) - (t/2) log pi.
inline double riemann_siegel_theta_mod(double t) {
  const cplx lg = log_gamma_right(cplx{0.25, t / 2.0});
  return lg.imag() - 0.5 * t * std::log(std::numbers::pi);
}

/// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + i t), real on the critical line.
inline double hardy_z(double t, const SeriesConfig& series = {}) {
  const cplx rotated = std::polar(1.0, riemann_siegel_theta_mod(t)) *
                       zeta_right(ComplexPoint(0.5, t), series);
  return rotated.real();
}

/// Bisection on a sign change of Hardy's Z; a cross-check for energy_min.
inline ZeroRecord refine_sign_change(double lo, double hi, const SeriesConfig& series, double tol,
                                     int max_iters = 200) {
  double z_lo = hardy_z(lo, series);
  const double z_hi = hardy_z(hi, series);
  if (!(z_lo * z_hi < 0.0)) {
    throw NoInteriorMinimum("refine_sign_change: Z(t) has no sign change on the bracket");
  }
  int iters = 0;
  while (hi - lo >= tol && iters < max_iters) {
    const double m = 0.5 * (lo + hi);
    const double zm = hardy_z(m, series);
    if ((zm < 0.0) == (z_lo < 0.0)) {
      lo = m;
      z_lo = zm;
    } else {
      hi = m;
    }
    ++iters;
  }
  if (hi - lo >= tol) {
    throw RefinementStalled("refine_sign_change: bracket still wide");
  }
  ZeroRecord rec;
  rec.lambda_star = 0.5 * (lo + hi);
  rec.energy_at_min = ground_energy(rec.lambda_star, series);
  rec.bracket_lo = lo;
  rec.bracket_hi = hi;
  rec.iterations = iters;
  rec.method = ZeroMethod::sign_change;
  return rec;
}

/// Ground states available to the model with scale step omega: one per zero
/// in the range, with rho = w/2 - lambda*. More than one entry means the
/// vacuum is degenerate over that range.
struct VacuumCandidate {
  double lambda_star = 0.0;
  double rho = 0.0;
  double energy = 0.0;
};

inline std::vector<VacuumCandidate> vacua_in_range(const OmegaParam& omega, const ScanConfig& cfg,
                                                   const SeriesConfig& series = {}) {
  std::vector<VacuumCandidate> out;
  for (const auto& rec : scan(cfg, series)) {
    out.push_back({rec.lambda_star, omega.half() - rec.lambda_star, rec.energy_at_min});
  }
  return out;
}

}  // namespace susyzeta
