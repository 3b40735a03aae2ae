#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hsolab {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "hsolab-report/1";

/// One serializable result. payload keys keep insertion order.
struct Report {
  std::string kind;  // index | bound | monotonicity | extremal | conjecture | sweep | summary | roundtrip
  Json payload = Json::object();
};

/// 12 significant digits, shortest "%g"-style form, locale independent.
/// Non-finite values become "null".
std::string format_number(double value);

/// {"schema":..., "kind":..., "payload":{...}} with floats via format_number
/// and no whitespace.
std::string to_json_line(const Report& report);

/// CSV columns: schema, kind, then the payload's top-level keys in order.
/// Non-scalar values are embedded as compact JSON text.
std::string csv_header(const Report& report);
std::string to_csv_row(const Report& report);

std::string to_human(const Report& report);

enum class OutputFormat { kJson, kCsv, kHuman };

/// Writes reports one per line; CSV emits a header whenever the column set
/// changes.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}
  void write(const Report& report);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::string last_header_;
};

}  // namespace hsolab
