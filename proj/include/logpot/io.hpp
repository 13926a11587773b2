#pragma once

// Serialization: RFC-4180 CSV, single-object JSON, plain-text ledgers, and
// atomic file writes (temp + rename, so failed runs never leave partial
// tables).  All decimals are printed with 17 significant digits so that two
// runs with the same configuration are byte-identical.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "logpot/errors.hpp"
#include "logpot/spectrum.hpp"
#include "logpot/transform.hpp"

namespace logpot {

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// JSON number or null (JSON has no NaN/Inf).
inline std::string json_number(double v) {
  return std::isfinite(v) ? fmt_g17(v) : std::string("null");
}

inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw io_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw io_error("rename to " + path.string() + " failed");
  }
}

inline std::string spectrum_to_csv(const spectrum_table& t) {
  std::string out = "k,lambda_oracle,lambda_closed,flag,rel_residual\r\n";
  for (const auto& r : t.rows) {
    out += std::to_string(r.k);
    out += ',';
    out += fmt_g17(r.lambda_oracle);
    out += ',';
    out += r.has_closed ? fmt_g17(r.lambda_closed) : std::string("nan");
    out += ',';
    out += r.valid ? "VALID" : "INVALID";
    out += ',';
    out += (r.has_closed && std::isfinite(r.rel_residual)) ? fmt_g17(r.rel_residual)
                                                           : std::string("nan");
    out += "\r\n";
  }
  return out;
}

inline std::string spectrum_to_json(const spectrum_table& t) {
  std::string out = "{\n  \"params\": {\"nu\": " + fmt_g17(t.params.nu) +
                    ", \"m\": " + std::to_string(t.params.m) + "},\n  \"rows\": [\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    out += "    {\"k\": " + std::to_string(r.k) +
           ", \"lambda_oracle\": " + json_number(r.lambda_oracle) +
           ", \"lambda_closed\": " + (r.has_closed ? json_number(r.lambda_closed)
                                                   : std::string("null")) +
           ", \"flag\": \"" + (r.valid ? "VALID" : "INVALID") + "\"" +
           ", \"rel_residual\": " +
           (r.has_closed ? json_number(r.rel_residual) : std::string("null")) + "}";
    if (i + 1 < t.rows.size()) out += ',';
    out += '\n';
  }
  out += "  ],\n  \"fit\": ";
  if (t.fit.present) {
    out += "{\"k_min\": " + std::to_string(t.fit.k_min) +
           ", \"k_max\": " + std::to_string(t.fit.k_max) +
           ", \"slope\": " + json_number(t.fit.slope) +
           ", \"constant\": " + json_number(t.fit.constant) + "}";
  } else {
    out += "null";
  }
  out += "\n}\n";
  return out;
}

inline std::string ledger_to_text(const std::vector<ledger_entry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.key;
    out += " = ";
    out += e.value;
    out += '\n';
  }
  return out;
}

// rho, closed, oracle, rel_diff rows for the action command.
struct action_row {
  double rho = 0.0;
  double closed = std::numeric_limits<double>::quiet_NaN();
  bool has_closed = false;
  double oracle = 0.0;
  double rel_diff = std::numeric_limits<double>::quiet_NaN();
};

inline std::string action_to_csv(const std::vector<action_row>& rows) {
  std::string out = "rho,closed,oracle,rel_diff\r\n";
  for (const auto& r : rows) {
    out += fmt_g17(r.rho);
    out += ',';
    out += r.has_closed ? fmt_g17(r.closed) : std::string("nan");
    out += ',';
    out += fmt_g17(r.oracle);
    out += ',';
    out += (r.has_closed && std::isfinite(r.rel_diff)) ? fmt_g17(r.rel_diff)
                                                       : std::string("nan");
    out += "\r\n";
  }
  return out;
}

// Output directory resolution: explicit flag > config file > LOGPOT_OUT > cwd.
inline std::string env_out_dir() {
  const char* v = std::getenv("LOGPOT_OUT");
  return v ? std::string(v) : std::string();
}

} // namespace logpot
