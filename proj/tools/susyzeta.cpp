// susyzeta: evaluate zeta, scan the critical line for zeros of the SUSY
// ground-state energy, export spectra and run the invariant suites.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "susyzeta/report_io.hpp"
#include "susyzeta/susyzeta.hpp"

namespace fs = std::filesystem;
using namespace susyzeta;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_domain = 2;

struct GlobalOptions {
  int precision = 12;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
  std::string cache_dir;
  std::string acceleration = "cvz";
  double target_error = 1e-14;
  std::size_t max_terms = 512;
};

SeriesConfig series_from(const GlobalOptions& g) {
  SeriesConfig cfg;
  cfg.target_abs_error = g.target_error;
  cfg.max_terms = g.max_terms;
  if (g.acceleration == "cvz") {
    cfg.acceleration = Acceleration::cvz_alternating;
  } else if (g.acceleration == "euler") {
    cfg.acceleration = Acceleration::euler_transform;
  } else {
    cfg.acceleration = Acceleration::direct_partial_sums;
  }
  return cfg;
}

void add_series_settings(io::Settings& s, const GlobalOptions& g) {
  s["acceleration"] = g.acceleration;
  s["target_error"] = io::format_real(g.target_error);
  s["max_terms"] = std::to_string(g.max_terms);
}

fs::path resolve_cache_dir(const GlobalOptions& g) {
  if (!g.cache_dir.empty()) return g.cache_dir;
  if (const char* env = std::getenv("SUSYZETA_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return fs::path(g.out_dir) / "cache";
}

void write_manifest(const fs::path& path, const io::RunManifest& m) {
  io::write_text(path, m.to_json().dump(2) + "\n");
}

int run_zeta(const GlobalOptions& g, double sigma, double lambda) {
  try {
    const ComplexPoint s(sigma, lambda);
    const cplx v = zeta(s, series_from(g));
    std::printf("%.*g %.*g\n", g.precision, v.real(), g.precision, v.imag());
    return exit_ok;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_domain;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_failed;
  }
}

int run_scan(const GlobalOptions& g, const ScanConfig& cfg) {
  io::Settings settings{{"lambda_min", io::format_real(cfg.lambda_min)},
                        {"lambda_max", io::format_real(cfg.lambda_max)},
                        {"coarse_step", io::format_real(cfg.coarse_step)},
                        {"detect_threshold", io::format_real(cfg.detect_threshold)},
                        {"refine_tol", io::format_real(cfg.refine_tol)},
                        {"max_refine_iters", std::to_string(cfg.max_refine_iters)},
                        {"accept_energy", io::format_real(cfg.accept_energy)}};
  add_series_settings(settings, g);
  auto manifest = io::RunManifest::make("scan", settings);

  const fs::path out_dir = g.out_dir;
  const fs::path csv_path = out_dir / "zeros.csv";
  manifest.outputs = {csv_path.filename().string()};

  std::vector<ZeroRecord> records;
  int code = exit_ok;
  try {
    records = scan(cfg, series_from(g));
  } catch (const RefinementStalled& e) {
    records = e.partial();
    manifest.status = "FAILED";
    std::fprintf(stderr, "error: %s\n", e.what());
    code = exit_failed;
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_domain;
  } catch (const Error& e) {
    manifest.status = "FAILED";
    std::fprintf(stderr, "error: %s\n", e.what());
    code = exit_failed;
  }

  const std::string body = io::zeros_csv(records);
  io::write_text(csv_path, body);
  write_manifest(out_dir / "zeros.manifest.json", manifest);
  if (manifest.status == "OK") {
    io::append_to_cache(resolve_cache_dir(g) / "zero_cache.csv", manifest.config_hash, records);
  }
  std::fputs(body.c_str(), stdout);
  return code;
}

int run_spectrum(const GlobalOptions& g, double omega, double lambda_star, int n_max) {
  ModelConfig cfg;
  try {
    cfg.omega = OmegaParam(omega);
    cfg.lambda_star = lambda_star;
    cfg.n_max = n_max;
    cfg.series = series_from(g);
    cfg.validate();
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_domain;
  }
  io::Settings settings{{"omega", io::format_real(omega)},
                        {"lambda_star", io::format_real(lambda_star)},
                        {"n_max", std::to_string(n_max)}};
  add_series_settings(settings, g);
  auto manifest = io::RunManifest::make("spectrum", settings);
  const fs::path out_dir = g.out_dir;
  manifest.outputs = {"spectrum.json"};

  try {
    const auto levels = build_spectrum(cfg);
    const auto iso = check_isospectral(cfg);
    if (!iso.ok()) manifest.status = "TOLERANCE_FAILURES";
    const std::string text = io::spectrum_json(cfg, levels, iso).dump(2) + "\n";
    io::write_text(out_dir / "spectrum.json", text);
    write_manifest(out_dir / "spectrum.manifest.json", manifest);
    std::fputs(text.c_str(), stdout);
  } catch (const Error& e) {
    manifest.status = "FAILED";
    write_manifest(out_dir / "spectrum.manifest.json", manifest);
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_failed;
  }
  return exit_ok;
}

int run_verify(const GlobalOptions& g, const std::string& suite_name) {
  Suite suite = Suite::all;
  if (suite_name == "algebra") suite = Suite::algebra;
  else if (suite_name == "basis") suite = Suite::basis;
  else if (suite_name == "selfadjoint") suite = Suite::selfadjoint;

  io::Settings settings{{"suite", suite_name}, {"seed", std::to_string(g.seed)}};
  add_series_settings(settings, g);
  auto manifest = io::RunManifest::make("verify", settings);
  manifest.outputs = {"verify_report.txt"};

  SuiteReport report;
  try {
    report = run_suite(suite, g.seed, series_from(g));
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_failed;
  }
  const std::string text = "seed " + std::to_string(g.seed) + " suite " + suite_name + "\n" + report.to_text();
  const fs::path out_dir = g.out_dir;
  if (!report.passed()) manifest.status = "FAILED";
  io::write_text(out_dir / "verify_report.txt", text);
  write_manifest(out_dir / "verify.manifest.json", manifest);
  std::fputs(text.c_str(), stdout);
  if (const auto* bad = report.first_failure()) {
    std::fprintf(stderr, "invariant failed: %s\n", bad->name.c_str());
    return exit_failed;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-line zeros from the ground-state energy of a supersymmetric model"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tool_version));

  GlobalOptions g;
  app.add_option("--precision", g.precision, "Significant digits for printed values")
      ->check(CLI::Range(1, 17));
  app.add_option("--seed", g.seed, "Seed for the randomized invariant suites");
  app.add_option("--out-dir", g.out_dir, "Directory for CSV/JSON outputs and manifests");
  app.add_option("--cache-dir", g.cache_dir,
                 "Zero cache directory (default: $SUSYZETA_CACHE_DIR, else <out-dir>/cache)");
  app.add_option("--acceleration", g.acceleration, "Alternating-series scheme")
      ->check(CLI::IsMember({"cvz", "euler", "direct"}));
  app.add_option("--target-error", g.target_error, "Absolute error target for eta")
      ->check(CLI::Range(1e-14, 1.0));
  app.add_option("--max-terms", g.max_terms, "Term budget for the series")->check(CLI::Range(16, 1000000));

  double sigma = 0.0;
  double lambda = 0.0;
  auto* zeta_cmd = app.add_subcommand("zeta", "Evaluate zeta(sigma + i lambda)");
  zeta_cmd->add_option("--sigma", sigma, "Real part")->required();
  zeta_cmd->add_option("--lambda", lambda, "Imaginary part")->required();

  ScanConfig scan_cfg;
  scan_cfg.lambda_min = 10.0;
  scan_cfg.lambda_max = 50.0;
  auto* scan_cmd = app.add_subcommand("scan", "Locate zeros of E(lambda) on an interval");
  scan_cmd->add_option("--min", scan_cfg.lambda_min, "Lower end of the lambda range")->required();
  scan_cmd->add_option("--max", scan_cfg.lambda_max, "Upper end of the lambda range")->required();
  scan_cmd->add_option("--step", scan_cfg.coarse_step, "Coarse grid step")->capture_default_str();
  scan_cmd->add_option("--threshold", scan_cfg.detect_threshold, "Basin detection threshold on E")->capture_default_str();
  scan_cmd->add_option("--refine-tol", scan_cfg.refine_tol, "Final bracket width")->capture_default_str();
  scan_cmd->add_option("--max-iters", scan_cfg.max_refine_iters, "Refinement iteration cap")->capture_default_str();
  scan_cmd->add_option("--accept-energy", scan_cfg.accept_energy, "E below this counts as a zero")->capture_default_str();

  double omega = 1.0;
  double lambda_star = 0.0;
  int n_max = 8;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Export the SUSY tower as JSON");
  spectrum_cmd->add_option("--omega", omega, "Ladder step omega (real, nonzero)")->required();
  spectrum_cmd->add_option("--lambda-star", lambda_star, "Ground-state zero location")->required();
  spectrum_cmd->add_option("--n-max", n_max, "Tower depth (1..64)")->capture_default_str();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded invariant suites");
  verify_cmd->add_option("--suite", suite, "algebra|basis|selfadjoint|all")->capture_default_str()
      ->check(CLI::IsMember({"algebra", "basis", "selfadjoint", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_domain;
  }

  try {
    if (zeta_cmd->parsed()) return run_zeta(g, sigma, lambda);
    if (scan_cmd->parsed()) return run_scan(g, scan_cfg);
    if (spectrum_cmd->parsed()) return run_spectrum(g, omega, lambda_star, n_max);
    if (verify_cmd->parsed()) return run_verify(g, suite);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_failed;
  }
  return exit_domain;
}
