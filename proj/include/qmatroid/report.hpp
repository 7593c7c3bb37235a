#pragma once

#include <string>
#include <vector>

namespace qmatroid {

/// One verification outcome: which check ran, on what, at which parameters,
/// and the two exactly-evaluated sides. Values travel as decimal strings
/// (rationals render as "num/den") so records survive serialization without
/// loss.
struct CheckRecord {
  std::string check;
  std::string subject;
  std::string params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string note;

  bool operator==(const CheckRecord& o) const = default;
};

inline constexpr const char* kReportHeader = "qmatroid-report v1";

/// Human-oriented rendering: the version header, then one line per record,
/// failures marked loudly.
std::string render_text(const std::vector<CheckRecord>& records);

/// Machine-oriented rendering: the version header, then one JSON object per
/// line, stable key order.
std::string render_structured(const std::vector<CheckRecord>& records);

/// Inverse of render_structured. ParseError on a missing or foreign header
/// and on malformed lines. parse(render(r)) == r, and re-rendering a parsed
/// report reproduces the input byte for byte.
std::vector<CheckRecord> parse_structured(const std::string& text);

}  // namespace qmatroid
