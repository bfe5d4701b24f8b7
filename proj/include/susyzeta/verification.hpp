#pragma once

// Seeded invariant suites over the operator algebra, the SUSY tower and the
// basis checks. Shared by the `verify` subcommand and the test binaries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "susyzeta/dirac_basis.hpp"
#include "susyzeta/monomial.hpp"
#include "susyzeta/susy_model.hpp"
#include "susyzeta/zero_finder.hpp"
#include "susyzeta/zeta.hpp"

namespace susyzeta {

/// Uniform doubles from mt19937_64 without std::uniform_real_distribution,
/// whose output is implementation-defined.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool coin() { return (engine_() >> 63) != 0; }
  /// Magnitude in [lo, hi], random sign.
  double signed_magnitude(double lo, double hi) { return coin() ? uniform(lo, hi) : -uniform(lo, hi); }
  cplx complex_in_box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

 private:
  std::mt19937_64 engine_;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.passed ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.detail.empty()) out += "  " + c.detail;
      out += '\n';
    }
    return out;
  }
  void append(const SuiteReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

namespace detail {

inline std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline double rel_err(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

inline MonomialState random_state(SampleRng& rng, double sigma) {
  const Parity parity = rng.coin() ? Parity::even : Parity::odd;
  return MonomialState(sigma, rng.uniform(-25.0, 25.0), parity, rng.complex_in_box(2.0));
}

inline MonomialState random_strip_state(SampleRng& rng) {
  return random_state(rng, rng.uniform(0.05, 0.95));
}

inline OmegaParam random_omega(SampleRng& rng) { return OmegaParam(rng.signed_magnitude(0.5, 5.0)); }

// Largest coefficient mismatch of two doublets, relative to `scale`.
inline double doublet_mismatch(const DoubletState& a, const DoubletState& b, double scale) {
  const DoubletState diff = subtract(a, b);
  return std::max(std::abs(diff.top().coeff()), std::abs(diff.bottom().coeff())) /
         std::max(scale, 1e-300);
}

inline double doublet_scale(const DoubletState& d) {
  return std::max(std::abs(d.top().coeff()), std::abs(d.bottom().coeff()));
}

inline CheckResult make_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace detail

/// Critical-line zeros used by the annihilation checks.
inline std::vector<ZeroRecord> reference_zeros(const SeriesConfig& series = {}) {
  ScanConfig cfg;
  cfg.lambda_min = 10.0;
  cfg.lambda_max = 50.0;
  return scan(cfg, series);
}

/// O/O^dagger commutation, H = composition identities, label arithmetic,
/// adjoint pairing, reality and sign of the eigenvalues.
inline SuiteReport algebra_suite(std::uint64_t seed, const SeriesConfig& series = {}) {
  using detail::fmt_sci;
  using detail::make_check;
  using detail::rel_err;
  SampleRng rng(seed);
  SuiteReport report;

  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto st = detail::random_strip_state(rng);
      const auto ab = apply_O(apply_O_dagger(st, series), series);
      const auto ba = apply_O_dagger(apply_O(st, series), series);
      worst = std::max(worst, rel_err(ab.coeff(), ba.coeff()));
    }
    report.checks.push_back(make_check("algebra.O_Odagger_commute", worst <= 1e-12,
                                       "max_rel=" + fmt_sci(worst) + " n=200"));
  }
  {
    double worst_minus = 0.0;
    double worst_plus = 0.0;
    bool labels_ok = true;
    for (int i = 0; i < 200; ++i) {
      const auto st = detail::random_strip_state(rng);
      const auto w = detail::random_omega(rng);
      const auto down = apply_A(w, st, series);
      const auto up = apply_A_dagger(w, st, series);
      labels_ok = labels_ok && down.sigma() == st.sigma() && up.sigma() == st.sigma() &&
                  down.parity() == st.parity() && up.parity() == st.parity() &&
                  down.rho() == st.rho() - w.value() && up.rho() == st.rho() + w.value();
      const auto hm = apply_H_minus(w, st, series);
      const auto hp = apply_H_plus(w, st, series);
      labels_ok = labels_ok && hm.rho() == st.rho() && hp.rho() == st.rho();
      worst_minus = std::max(worst_minus, rel_err(hm.coeff(), apply_A_dagger(w, down, series).coeff()));
      worst_plus = std::max(worst_plus, rel_err(hp.coeff(), apply_A(w, up, series).coeff()));
    }
    report.checks.push_back(make_check("algebra.H_minus_eq_AdaggerA", worst_minus <= 1e-12,
                                       "max_rel=" + fmt_sci(worst_minus) + " n=200"));
    report.checks.push_back(make_check("algebra.H_plus_eq_AAdagger", worst_plus <= 1e-12,
                                       "max_rel=" + fmt_sci(worst_plus) + " n=200"));
    report.checks.push_back(make_check("algebra.label_arithmetic_exact", labels_ok, "n=200"));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double rho = rng.uniform(-25.0, 25.0);
      const auto w = detail::random_omega(rng);
      const cplx up = a_dagger_multiplier(0.5, rho, w, series);
      const cplx down = a_multiplier(0.5, rho + w.value(), w, series);
      worst = std::max(worst, rel_err(up, std::conj(down)));
    }
    report.checks.push_back(make_check("algebra.adjoint_pairing_critical_line", worst <= 1e-12,
                                       "max_rel=" + fmt_sci(worst) + " n=100"));
  }
  {
    double worst_im = 0.0;
    double min_re = INFINITY;
    for (int i = 0; i < 50; ++i) {
      const cplx e = eigenvalue_H_minus(0.5, rng.uniform(-25.0, 25.0), detail::random_omega(rng), series);
      worst_im = std::max(worst_im, std::abs(e.imag()));
      min_re = std::min(min_re, e.real());
    }
    report.checks.push_back(make_check("algebra.reality_on_critical_line", worst_im <= 1e-12,
                                       "max_abs_im=" + fmt_sci(worst_im) + " n=50"));
    report.checks.push_back(make_check("algebra.nonnegative_on_critical_line", min_re >= 0.0,
                                       "min_re=" + fmt_sci(min_re) + " n=50"));
  }
  {
    int failures = 0;
    double smallest = INFINITY;
    for (int i = 0; i < 50; ++i) {
      double sigma = rng.uniform(0.05, 0.95);
      while (std::abs(sigma - 0.5) <= 0.05) sigma = rng.uniform(0.05, 0.95);
      const cplx e = eigenvalue_H_minus(sigma, rng.uniform(-25.0, 25.0), detail::random_omega(rng), series);
      if (std::abs(e) < 1e-10) continue;
      smallest = std::min(smallest, std::abs(e.imag()));
      if (!(std::abs(e.imag()) > 1e-10)) ++failures;
    }
    report.checks.push_back(make_check("algebra.nonreal_off_critical_line", failures == 0,
                                       "min_abs_im=" + fmt_sci(smallest) + " n=50"));
  }
  return report;
}

/// Supercharge algebra on doublets, the spectrum tower, ground-state
/// annihilation at refined zeros and the B-operator eigenvalue.
inline SuiteReport susy_suite(std::uint64_t seed, const SeriesConfig& series = {}) {
  using detail::fmt_sci;
  using detail::make_check;
  using detail::rel_err;
  SampleRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  SuiteReport report;

  {
    double nilpotent = 0.0;
    double anticomm = 0.0;
    double comm_q = 0.0;
    double comm_qd = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double sigma = rng.coin() ? 0.5 : rng.uniform(0.05, 0.95);
      const auto top = detail::random_state(rng, sigma);
      const MonomialState bottom(sigma, rng.uniform(-25.0, 25.0), top.parity(), rng.complex_in_box(2.0));
      const DoubletState d(top, bottom);
      const auto w = detail::random_omega(rng);

      const auto qq = apply_Q(w, apply_Q(w, d, series), series);
      const auto qdqd = apply_Q_dagger(w, apply_Q_dagger(w, d, series), series);
      nilpotent = std::max({nilpotent, detail::doublet_scale(qq), detail::doublet_scale(qdqd)});

      const auto hd = apply_H(w, d, series);
      const auto lhs = add(apply_Q(w, apply_Q_dagger(w, d, series), series),
                           apply_Q_dagger(w, apply_Q(w, d, series), series));
      anticomm = std::max(anticomm, detail::doublet_mismatch(lhs, hd, detail::doublet_scale(hd)));

      const auto qh = apply_Q(w, hd, series);
      const auto hq = apply_H(w, apply_Q(w, d, series), series);
      comm_q = std::max(comm_q, detail::doublet_mismatch(qh, hq, detail::doublet_scale(qh)));
      const auto qdh = apply_Q_dagger(w, hd, series);
      const auto hqd = apply_H(w, apply_Q_dagger(w, d, series), series);
      comm_qd = std::max(comm_qd, detail::doublet_mismatch(qdh, hqd, detail::doublet_scale(qdh)));
    }
    report.checks.push_back(make_check("susy.Q_nilpotent", nilpotent == 0.0,
                                       "max_abs=" + fmt_sci(nilpotent) + " n=50"));
    report.checks.push_back(make_check("susy.anticommutator_eq_H", anticomm <= 1e-12,
                                       "max_rel=" + fmt_sci(anticomm) + " n=50"));
    report.checks.push_back(make_check("susy.Q_commutes_with_H", comm_q <= 1e-12,
                                       "max_rel=" + fmt_sci(comm_q) + " n=50"));
    report.checks.push_back(make_check("susy.Qdagger_commutes_with_H", comm_qd <= 1e-12,
                                       "max_rel=" + fmt_sci(comm_qd) + " n=50"));
  }

  const auto zeros = reference_zeros(series);
  {
    double worst_annihilation = 0.0;
    double weakest_offset = INFINITY;
    for (const auto& z : zeros) {
      ModelConfig cfg;
      cfg.omega = detail::random_omega(rng);
      cfg.lambda_star = z.lambda_star;
      cfg.series = series;
      const auto psi0 = ground_state(cfg);
      worst_annihilation = std::max(worst_annihilation, std::abs(apply_A(cfg.omega, psi0, series).coeff()));
      for (double off : {-0.5, 0.5}) {
        cfg.lambda_star = z.lambda_star + off;
        weakest_offset = std::min(weakest_offset,
                                  std::abs(apply_A(cfg.omega, ground_state(cfg), series).coeff()));
      }
    }
    report.checks.push_back(make_check("susy.ground_state_annihilated",
                                       zeros.size() == 10 && worst_annihilation < 1e-8,
                                       "zeros=" + std::to_string(zeros.size()) +
                                           " max_abs=" + fmt_sci(worst_annihilation)));
    report.checks.push_back(make_check("susy.no_annihilation_off_zero", weakest_offset > 1e-3,
                                       "min_abs_at_pm0.5=" + fmt_sci(weakest_offset)));
  }
  {
    double min_energy = INFINITY;
    double worst_recursion = 0.0;
    double worst_ladder_ratio = 0.0;
    double worst_iso = 0.0;
    bool iso_ok = true;
    std::vector<double> lambdas;
    for (const auto& z : zeros) lambdas.push_back(z.lambda_star);
    for (int i = 0; i < 4; ++i) lambdas.push_back(rng.uniform(0.0, 40.0));
    for (double lambda : lambdas) {
      ModelConfig cfg;
      cfg.omega = OmegaParam(rng.uniform(0.5, 3.0));
      cfg.lambda_star = lambda;
      cfg.n_max = 16;
      cfg.series = series;
      const auto levels = build_spectrum(cfg);
      MonomialState chain = ground_state(cfg);
      for (const auto& level : levels) {
        min_energy = std::min(min_energy, level.E);
        if (level.n == 0) continue;
        const auto& prev = levels[static_cast<std::size_t>(level.n - 1)];
        worst_recursion = std::max(worst_recursion, rel_err(level.C_tilde, level.E * prev.C));
        chain = apply_A_dagger(cfg.omega, chain, series);
        worst_ladder_ratio = std::max(worst_ladder_ratio,
                                      rel_err(chain.coeff(), level.C) / ladder_tolerance(level.n));
      }
      const auto iso = check_isospectral(cfg);
      worst_iso = std::max(worst_iso, iso.max_rel_deviation);
      iso_ok = iso_ok && iso.ok();
    }
    report.checks.push_back(make_check("susy.spectrum_nonnegative", min_energy >= 0.0,
                                       "min_E=" + fmt_sci(min_energy)));
    report.checks.push_back(make_check("susy.Ctilde_recursion", worst_recursion <= 1e-12,
                                       "max_rel=" + fmt_sci(worst_recursion)));
    report.checks.push_back(make_check("susy.ladder_reproduces_Cn", worst_ladder_ratio <= 1.0,
                                       "max_rel/tol=" + fmt_sci(worst_ladder_ratio) + " n<=16"));
    report.checks.push_back(make_check("susy.partner_isospectral", iso_ok && worst_iso <= 1e-10,
                                       "max_rel=" + fmt_sci(worst_iso) + " n<=16"));
  }
  {
    bool exact = true;
    for (int i = 0; i < 20; ++i) {
      ModelConfig cfg;
      cfg.omega = detail::random_omega(rng);
      cfg.lambda_star = rng.uniform(-60.0, 60.0);
      const auto b = b_operator_check(cfg);
      const cplx expected{-0.5, cfg.omega.value() / 2.0 - cfg.lambda_star};
      exact = exact && b.eigenvalue == cfg.lambda_star && b.scale_generator_eigenvalue == expected;
    }
    report.checks.push_back(make_check("susy.B_eigenvalue_is_lambda_star", exact, "n=20"));
  }
  return report;
}

/// Discrete orthonormality, smeared continuum normalisation, completeness.
inline SuiteReport basis_suite(std::uint64_t seed) {
  using detail::fmt_sci;
  using detail::make_check;
  SampleRng rng(seed ^ 0xd1b54a32d192ed03ULL);
  SuiteReport report;
  {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const OmegaParam w(rng.signed_magnitude(0.25, 4.0));
      const auto m = orthonormality_matrix(16, w, ContourGrid(4 * 16 + 4));
      for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
          const cplx expected = r == c ? cplx{2.0 * std::numbers::pi / w.value()} : cplx{0.0};
          worst = std::max(worst, std::abs(m[r][c] - expected));
        }
      }
    }
    report.checks.push_back(make_check("basis.discrete_orthonormality", worst <= 1e-12,
                                       "max_abs=" + fmt_sci(worst) + " n,n'<=16"));
  }
  {
    double worst_on = 0.0;
    double worst_off = 0.0;
    double worst_doubling = 0.0;
    bool monotone = true;
    for (int i = 0; i < 5; ++i) {
      const double rho = rng.uniform(-20.0, 20.0);
      const double width = rng.uniform(0.2, 1.5);
      const SmearWindow on(rho, width);
      const double v = smeared_inner_product(rho, on);
      worst_on = std::max(worst_on, std::abs(v - 1.0));
      worst_off = std::max(worst_off, std::abs(smeared_inner_product(rho, SmearWindow(rho + 5.0 * width, width))));
      double prev_gap = INFINITY;
      for (double scale : {1.0, 1.5, 2.0}) {
        const double gap = std::abs(1.0 - smeared_inner_product(rho, on.with_cutoff(scale * on.u_cutoff())));
        monotone = monotone && gap <= prev_gap + 1e-15;
        prev_gap = gap;
      }
      worst_doubling = std::max(worst_doubling,
                                std::abs(smeared_inner_product(rho, on.with_cutoff(2.0 * on.u_cutoff())) - v));
    }
    report.checks.push_back(make_check("basis.smeared_norm", worst_on <= 1e-6,
                                       "max_dev=" + fmt_sci(worst_on)));
    report.checks.push_back(make_check("basis.smeared_off_center", worst_off < 1e-6,
                                       "max_abs=" + fmt_sci(worst_off)));
    report.checks.push_back(make_check("basis.smeared_cutoff_convergence",
                                       monotone && worst_doubling < 1e-9,
                                       "doubling_change=" + fmt_sci(worst_doubling)));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const int degree = static_cast<int>(rng.uniform(0.0, 33.0));
      std::vector<cplx> coeffs;
      for (int k = 0; k <= std::min(degree, 32); ++k) coeffs.push_back(rng.complex_in_box(1.0));
      const OmegaParam w(rng.uniform(0.5, 3.0));
      worst = std::max(worst, completeness_reconstruction(coeffs, w, rng.uniform(-30.0, 30.0), 97));
    }
    report.checks.push_back(make_check("basis.polynomial_completeness", worst < 1e-12,
                                       "max_err=" + fmt_sci(worst) + " deg<=32"));
  }
  return report;
}

/// The self-adjointness defect vanishes on sigma = 1/2 and nowhere else.
inline SuiteReport selfadjoint_suite(std::uint64_t seed, const SeriesConfig& series = {}) {
  using detail::fmt_sci;
  using detail::make_check;
  SampleRng rng(seed ^ 0x94d049bb133111ebULL);
  SuiteReport report;
  double worst_on = 0.0;
  for (int i = 0; i < 20; ++i) {
    worst_on = std::max(worst_on, self_adjointness_defect(0.5, rng.uniform(-25.0, 25.0),
                                                          detail::random_omega(rng), series));
  }
  report.checks.push_back(make_check("selfadjoint.defect_vanishes_at_sigma_half", worst_on < 1e-12,
                                     "max_defect=" + fmt_sci(worst_on) + " n=20"));
  double weakest_off = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const double sigma = rng.coin() ? rng.uniform(0.05, 0.4) : rng.uniform(0.6, 0.95);
    weakest_off = std::min(weakest_off, self_adjointness_defect(sigma, rng.uniform(-25.0, 25.0),
                                                                detail::random_omega(rng), series));
  }
  report.checks.push_back(make_check("selfadjoint.defect_nonzero_off_line", weakest_off > 1e-10,
                                     "min_defect=" + fmt_sci(weakest_off) + " n=20"));
  return report;
}

enum class Suite { algebra, basis, selfadjoint, all };

inline SuiteReport run_suite(Suite which, std::uint64_t seed, const SeriesConfig& series = {}) {
  SuiteReport report;
  if (which == Suite::algebra || which == Suite::all) {
    report.append(algebra_suite(seed, series));
    report.append(susy_suite(seed, series));
  }
  if (which == Suite::basis || which == Suite::all) report.append(basis_suite(seed));
  if (which == Suite::selfadjoint || which == Suite::all) report.append(selfadjoint_suite(seed, series));
  return report;
}

}  // namespace susyzeta
