#pragma once

// File formats of the command-line tool: zero CSV, spectrum JSON, run
// manifest and the append-only zero cache.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"  // nlohmann/json, vendored

#include "susyzeta/errors.hpp"
#include "susyzeta/susy_model.hpp"
#include "susyzeta/version.hpp"
#include "susyzeta/zero_finder.hpp"

namespace susyzeta::io {

inline constexpr const char* zeros_csv_header =
    "index,lambda_star,energy_at_min,bracket_lo,bracket_hi,iterations,method";
inline constexpr const char* cache_csv_header = "config_hash,lambda_star,energy_at_min,method";

/// 17 significant digits; round-trips every double.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string zeros_csv(const std::vector<ZeroRecord>& records) {
  std::string out = zeros_csv_header;
  out += '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out += std::to_string(i) + ',' + format_real(r.lambda_star) + ',' + format_real(r.energy_at_min) +
           ',' + format_real(r.bracket_lo) + ',' + format_real(r.bracket_hi) + ',' +
           std::to_string(r.iterations) + ',' + to_string(r.method) + '\n';
  }
  return out;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

inline std::vector<ZeroRecord> parse_zeros_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != zeros_csv_header) {
    throw InvalidArgument("zeros csv: missing or unexpected header");
  }
  std::vector<ZeroRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw InvalidArgument("zeros csv: expected 7 fields, got: " + line);
    ZeroRecord r;
    r.lambda_star = std::stod(f[1]);
    r.energy_at_min = std::stod(f[2]);
    r.bracket_lo = std::stod(f[3]);
    r.bracket_hi = std::stod(f[4]);
    r.iterations = std::stoi(f[5]);
    if (f[6] == "energy_min") {
      r.method = ZeroMethod::energy_min;
    } else if (f[6] == "sign_change") {
      r.method = ZeroMethod::sign_change;
    } else {
      throw InvalidArgument("zeros csv: unknown method " + f[6]);
    }
    out.push_back(r);
  }
  return out;
}

/// {omega, lambda_star, levels:[{n, C_re, C_im, Ctilde_re, Ctilde_im, E, psi_rho, psi_tilde_rho}]}
/// plus ground_energy and the per-level isospectrality outcome.
inline nlohmann::json spectrum_json(const ModelConfig& cfg, const std::vector<SpectrumLevel>& levels,
                                    const IsospectralReport& iso) {
  nlohmann::json doc;
  doc["omega"] = cfg.omega.value();
  doc["lambda_star"] = cfg.lambda_star;
  doc["n_max"] = cfg.n_max;
  doc["ground_energy"] = levels.empty() ? 0.0 : levels.front().E;
  auto& arr = doc["levels"] = nlohmann::json::array();
  for (const auto& l : levels) {
    arr.push_back({{"n", l.n},
                   {"C_re", l.C.real()},
                   {"C_im", l.C.imag()},
                   {"Ctilde_re", l.C_tilde.real()},
                   {"Ctilde_im", l.C_tilde.imag()},
                   {"E", l.E},
                   {"psi_rho", l.psi_rho},
                   {"psi_tilde_rho", l.psi_tilde_rho}});
  }
  auto& checks = doc["isospectral"] = nlohmann::json::object();
  checks["tolerance"] = iso.tolerance;
  checks["max_rel_deviation"] = iso.max_rel_deviation;
  checks["failed_levels"] = nlohmann::json::array();
  for (const auto& l : iso.levels) {
    if (!l.ok) checks["failed_levels"].push_back({{"n", l.n}, {"rel_deviation", l.rel_deviation}});
  }
  return doc;
}

/// Numeric settings of a run, keyed by flag name. std::map keeps the
/// canonical (sorted) order regardless of how flags were given.
using Settings = std::map<std::string, std::string>;

/// FNV-1a 64 over "key=value\n" lines in key order, as 16 hex digits.
inline std::string config_hash(const Settings& settings) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [k, v] : settings) {
    feed(k);
    feed("=");
    feed(v);
    feed("\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string iso8601_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RunManifest {
  std::string command;
  std::string config_hash;
  std::string tool_version = susyzeta::tool_version;
  std::string timestamp;
  std::string status = "OK";
  Settings settings;
  std::vector<std::string> outputs;

  static RunManifest make(std::string command, Settings settings) {
    RunManifest m;
    m.command = std::move(command);
    m.config_hash = io::config_hash(settings);
    m.timestamp = iso8601_now();
    m.settings = std::move(settings);
    return m;
  }

  nlohmann::json to_json() const {
    return {{"command", command},         {"config_hash", config_hash},
            {"tool_version", tool_version}, {"timestamp", timestamp},
            {"status", status},           {"settings", settings},
            {"outputs", outputs}};
  }

  static RunManifest from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::string>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.status = j.at("status").get<std::string>();
    m.settings = j.at("settings").get<Settings>();
    m.outputs = j.value("outputs", std::vector<std::string>{});
    return m;
  }

  /// The stored hash matches the stored settings.
  bool consistent() const { return io::config_hash(settings) == config_hash; }
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Appends zeros not already cached under `hash`. Returns the number added.
inline std::size_t append_to_cache(const std::filesystem::path& cache_file, const std::string& hash,
                                   const std::vector<ZeroRecord>& records) {
  std::set<std::string> seen;
  const bool exists = std::filesystem::exists(cache_file);
  if (exists) {
    std::istringstream in(read_text(cache_file));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto f = split_csv_line(line);
      if (f.size() >= 2) seen.insert(f[0] + ',' + f[1]);
    }
  } else if (cache_file.has_parent_path()) {
    std::filesystem::create_directories(cache_file.parent_path());
  }
  std::ofstream out(cache_file, std::ios::binary | std::ios::app);
  if (!out) throw Error("cannot open cache " + cache_file.string());
  if (!exists) out << cache_csv_header << '\n';
  std::size_t added = 0;
  for (const auto& r : records) {
    const std::string key = hash + ',' + format_real(r.lambda_star);
    if (!seen.insert(key).second) continue;
    out << key << ',' << format_real(r.energy_at_min) << ',' << to_string(r.method) << '\n';
    ++added;
  }
  return added;
}

}  // namespace susyzeta::io
