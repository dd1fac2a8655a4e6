#include "sdsirs/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>

#include "sdsirs/errors.hpp"
#include "sdsirs/version.hpp"

namespace sdsirs {

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  fail(Errc::unsupported_format, "unknown format '" + name + "' (json|csv)");
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string tool_version() { return SDSIRS_VERSION; }

RunManifest make_manifest(std::string command_line, std::uint64_t seed,
                          std::string_view spec_text) {
  RunManifest m;
  m.command_line = std::move(command_line);
  m.seed = seed;
  if (spec_text.empty()) {
    m.spec_hash = "-";
  } else {
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(spec_text)));
    m.spec_hash = buffer;
  }
  m.timestamp = iso8601_utc_now();
  m.version = tool_version();
  return m;
}

Cell cell(const std::string& value) { return {Cell::Kind::text, value}; }
Cell cell(const char* value) { return {Cell::Kind::text, value}; }

Cell cell(double value) {
  if (!std::isfinite(value)) return {Cell::Kind::text, format_double(value)};
  return {Cell::Kind::number, format_double(value)};
}

Cell cell(std::uint64_t value) {
  return {Cell::Kind::number, std::to_string(value)};
}

Cell cell(bool value) { return {Cell::Kind::boolean, value ? "true" : "false"}; }

Cell cell(const Rational& value) { return {Cell::Kind::text, ratio_string(value)}; }

namespace {

void append_json_string(std::string& out, std::string_view text) {
  out += '"';
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_json_cell(std::string& out, const Cell& c) {
  if (c.kind == Cell::Kind::text) {
    append_json_string(out, c.text);
  } else {
    out += c.text;
  }
}

void append_json_manifest(std::string& out, const RunManifest& m) {
  out += "{\"command_line\":";
  append_json_string(out, m.command_line);
  out += ",\"seed\":" + std::to_string(m.seed);
  out += ",\"spec_hash\":";
  append_json_string(out, m.spec_hash);
  out += ",\"timestamp\":";
  append_json_string(out, m.timestamp);
  out += ",\"version\":";
  append_json_string(out, m.version);
  out += "}";
}

std::string render_json(const ReportTable& table) {
  std::string out = "{\"manifest\":";
  append_json_manifest(out, table.manifest);
  out += ",\"title\":";
  append_json_string(out, table.title);
  out += ",\"columns\":[";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    append_json_string(out, table.columns[i]);
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out += ',';
    out += '{';
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
      if (i) out += ',';
      append_json_string(out, table.columns[i]);
      out += ':';
      append_json_cell(out, table.rows[r][i]);
    }
    out += '}';
  }
  out += "]}\n";
  return out;
}

void append_csv_field(std::string& out, std::string_view text) {
  const bool needs_quotes =
      text.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) {
    out += text;
    return;
  }
  out += '"';
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

std::string render_csv(const ReportTable& table) {
  std::string out;
  out += "# title=" + table.title + "\n";
  out += "# command_line=" + table.manifest.command_line + "\n";
  out += "# seed=" + std::to_string(table.manifest.seed) + "\n";
  out += "# spec_hash=" + table.manifest.spec_hash + "\n";
  out += "# timestamp=" + table.manifest.timestamp + "\n";
  out += "# version=" + table.manifest.version + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    append_csv_field(out, table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      append_csv_field(out, row[i].text);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_report(const ReportTable& table, ReportFormat format) {
  for (const auto& row : table.rows)
    require(row.size() == table.columns.size(), Errc::invalid_argument,
            "report row width differs from the column count");
  switch (format) {
    case ReportFormat::json: return render_json(table);
    case ReportFormat::csv: return render_csv(table);
  }
  fail(Errc::unsupported_format, "unhandled format");
}

}  // namespace sdsirs
