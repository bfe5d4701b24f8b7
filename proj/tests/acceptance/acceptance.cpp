// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance <path-to-susyzeta-cli>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle_fixtures.hpp"
#include "susyzeta/report_io.hpp"
#include "susyzeta/susyzeta.hpp"

using namespace susyzeta;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int failures = 0;

void criterion(const char* name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < time_limit_s;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s %-28s %s time=%.3fs (limit %.0fs)%s\n", ok ? "PASS" : "FAIL", name, o.detail.c_str(), secs,
              time_limit_s, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
}

Outcome pick(const SuiteReport& report, const std::vector<std::string>& names) {
  Outcome o{true, ""};
  for (const auto& name : names) {
    bool found = false;
    for (const auto& c : report.checks) {
      if (c.name != name) continue;
      found = true;
      o.ok = o.ok && c.passed;
      o.detail += (o.detail.empty() ? "" : "; ") + c.name + (c.passed ? "" : "[FAIL]") + " " + c.detail;
    }
    if (!found) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : "; ") + name + " missing";
    }
  }
  return o;
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <susyzeta-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  constexpr std::uint64_t seed = 42;

  criterion("zeta_at_zero", 1.0, [] {
    const double err = std::abs(zeta_left(ComplexPoint(0.0, 0.0)) - cplx(-0.5, 0.0));
    return Outcome{err < 1e-10, "|zeta(0)+1/2|=" + sci(err)};
  });

  criterion("trivial_zeros", 1.0, [] {
    double worst = 0.0;
    for (double s : {-2.0, -4.0, -6.0}) worst = std::max(worst, std::abs(zeta_left(ComplexPoint(s, 0.0))));
    return Outcome{worst < 1e-8, "max|zeta(-2k)|=" + sci(worst)};
  });

  criterion("functional_equation", 10.0, [] {
    SampleRng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const ComplexPoint s(rng.uniform(0.05, 0.95), rng.uniform(-30.0, 30.0));
      worst = std::max(worst, std::abs(zeta_right(s) - zeta_left(s)));
    }
    return Outcome{worst < 1e-8, "max_residual=" + sci(worst) + " n=50"};
  });

  criterion("zero_scan_10_50", 60.0, [] {
    ScanConfig cfg;
    cfg.lambda_min = 10.0;
    cfg.lambda_max = 50.0;
    const auto zeros = scan(cfg);
    const std::size_t expected = 10;
    double worst_loc = 0.0;
    double worst_e = 0.0;
    const bool count_ok = zeros.size() == expected;
    for (std::size_t i = 0; i < std::min(zeros.size(), expected); ++i) {
      worst_loc = std::max(worst_loc, std::abs(zeros[i].lambda_star - fixtures::zeros_0_60[i]));
      worst_e = std::max(worst_e, zeros[i].energy_at_min);
    }
    return Outcome{count_ok && worst_loc < 1e-6 && worst_e < 1e-9,
                   "records=" + std::to_string(zeros.size()) + " max_dlambda=" + sci(worst_loc) +
                       " max_E=" + sci(worst_e)};
  });

  criterion("susy_properties", 60.0, [] {
    return pick(susy_suite(seed), {"susy.ground_state_annihilated", "susy.spectrum_nonnegative", "susy.partner_isospectral",
                       "susy.Q_nilpotent", "susy.anticommutator_eq_H"});
  });

  criterion("ladder_constants", 10.0, [] {
    return pick(susy_suite(seed), {"susy.ladder_reproduces_Cn", "susy.Ctilde_recursion"});
  });

  criterion("self_adjointness", 10.0, [] {
    return pick(selfadjoint_suite(seed),
                {"selfadjoint.defect_vanishes_at_sigma_half", "selfadjoint.defect_nonzero_off_line"});
  });

  criterion("basis_checks", 10.0, [] {
    return pick(basis_suite(seed),
                {"basis.discrete_orthonormality", "basis.smeared_norm", "basis.polynomial_completeness"});
  });

  criterion("b_operator", 1.0, [] { return pick(susy_suite(seed), {"susy.B_eigenvalue_is_lambda_star"}); });

  criterion("determinism", 120.0, [&] {
    const auto root = fs::temp_directory_path() / ("susyzeta_accept_" + std::to_string(std::random_device{}()));
    std::array<std::string, 2> csv;
    std::array<std::string, 2> report;
    bool exit_ok = true;
    for (int i = 0; i < 2; ++i) {
      const auto dir = root / std::to_string(i);
      const std::string common = "--seed 42 --out-dir " + dir.string() + " --cache-dir " + (dir / "cache").string();
      exit_ok = exit_ok && run_cli(cli, common + " scan --min 10 --max 50") == 0;
      exit_ok = exit_ok && run_cli(cli, common + " verify --suite all") == 0;
      csv[static_cast<std::size_t>(i)] = io::read_text(dir / "zeros.csv");
      report[static_cast<std::size_t>(i)] = io::read_text(dir / "verify_report.txt");
    }
    fs::remove_all(root);
    const bool same_csv = csv[0] == csv[1] && !csv[0].empty();
    const bool same_report = report[0] == report[1] && !report[0].empty();
    return Outcome{exit_ok && same_csv && same_report,
                   std::string("exit_ok=") + (exit_ok ? "1" : "0") + " csv_identical=" + (same_csv ? "1" : "0") +
                       " report_identical=" + (same_report ? "1" : "0")};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
