#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdsirs/exact.hpp"

namespace sdsirs {

enum class ReportFormat { json, csv };

ReportFormat parse_format(const std::string& name);

/// Provenance block embedded in every report. Timestamps are excluded from
/// the byte-equality contract; everything else is deterministic for a fixed
/// command line and seed.
struct RunManifest {
  std::string command_line;
  std::uint64_t seed = 0;
  std::string spec_hash;  // FNV-1a of the input spec text, "-" when none
  std::string timestamp;  // ISO 8601 UTC
  std::string version;    // git describe of the build
};

RunManifest make_manifest(std::string command_line, std::uint64_t seed,
                          std::string_view spec_text);

std::uint64_t fnv1a64(std::string_view text);
std::string format_double(double value);  // 12 significant digits
std::string iso8601_utc_now();
std::string tool_version();

/// One table cell, preformatted. The kind controls JSON token emission;
/// CSV writes the text as-is (quoted when needed).
struct Cell {
  enum class Kind { text, number, boolean };
  Kind kind = Kind::text;
  std::string text;
};

Cell cell(const std::string& value);
Cell cell(const char* value);
Cell cell(double value);  // nonfinite values degrade to quoted text
Cell cell(std::uint64_t value);
Cell cell(bool value);
Cell cell(const Rational& value);  // "p/q"

/// Table-shaped report: fixed column set, one row per record.
struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  RunManifest manifest;
};

/// JSON: {"manifest": {...}, "title": ..., "columns": [...], "rows": [{...}]}.
/// CSV: "# key=value" manifest comments, then a header row, then data rows.
/// Field order is fixed in both formats.
std::string render_report(const ReportTable& table, ReportFormat format);

}  // namespace sdsirs
