#include "hsolab/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace hsolab {

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  if (value == 0.0) return "0";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

namespace {

void dump(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out += ',';
        dump(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string dump(const Json& j) {
  std::string out;
  dump(j, out);
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return dump(value);
}

}  // namespace

std::string to_json_line(const Report& report) {
  Json wrapper = Json::object();
  wrapper["schema"] = kReportSchema;
  wrapper["kind"] = report.kind;
  wrapper["payload"] = report.payload;
  return dump(wrapper);
}

std::string csv_header(const Report& report) {
  std::string out = "schema,kind";
  for (const auto& [key, value] : report.payload.items()) out += "," + csv_field(key);
  return out;
}

std::string to_csv_row(const Report& report) {
  std::string out = std::string(kReportSchema) + "," + csv_field(report.kind);
  for (const auto& [key, value] : report.payload.items()) out += "," + csv_field(scalar_text(value));
  return out;
}

std::string to_human(const Report& report) {
  std::string out = "[" + report.kind + "]";
  for (const auto& [key, value] : report.payload.items()) out += " " + key + "=" + scalar_text(value);
  return out;
}

void ReportWriter::write(const Report& report) {
  switch (format_) {
    case OutputFormat::kJson:
      out_ << to_json_line(report) << '\n';
      break;
    case OutputFormat::kCsv: {
      std::string header = csv_header(report);
      if (header != last_header_) {
        out_ << header << '\n';
        last_header_ = std::move(header);
      }
      out_ << to_csv_row(report) << '\n';
      break;
    }
    case OutputFormat::kHuman:
      out_ << to_human(report) << '\n';
      break;
  }
}

}  // namespace hsolab
