#include "qmatroid/report.hpp"

#include <sstream>

#include "json.hpp"
#include "qmatroid/errors.hpp"

namespace qmatroid {

std::string render_text(const std::vector<CheckRecord>& records) {
  std::ostringstream out;
  out << kReportHeader << "\n";
  for (const CheckRecord& r : records) {
    out << (r.pass ? "pass" : "FAIL") << " " << r.check << " " << r.subject;
    if (!r.params.empty()) out << " " << r.params;
    out << " lhs=" << r.lhs << " rhs=" << r.rhs;
    if (!r.note.empty()) out << " -- " << r.note;
    out << "\n";
  }
  return out.str();
}

std::string render_structured(const std::vector<CheckRecord>& records) {
  std::ostringstream out;
  out << kReportHeader << "\n";
  for (const CheckRecord& r : records) {
    nlohmann::ordered_json line;
    line["check"] = r.check;
    line["subject"] = r.subject;
    line["params"] = r.params;
    line["lhs"] = r.lhs;
    line["rhs"] = r.rhs;
    line["pass"] = r.pass;
    line["note"] = r.note;
    out << line.dump() << "\n";
  }
  return out.str();
}

std::vector<CheckRecord> parse_structured(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader)
    fail(ErrorKind::ParseError,
         std::string("expected report header \"") + kReportHeader + "\"");
  std::vector<CheckRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object())
      fail(ErrorKind::ParseError,
           "report line " + std::to_string(line_no) + " is not a JSON object");
    CheckRecord r;
    try {
      r.check = parsed.at("check").get<std::string>();
      r.subject = parsed.at("subject").get<std::string>();
      r.params = parsed.at("params").get<std::string>();
      r.lhs = parsed.at("lhs").get<std::string>();
      r.rhs = parsed.at("rhs").get<std::string>();
      r.pass = parsed.at("pass").get<bool>();
      r.note = parsed.at("note").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, "report line " + std::to_string(line_no) +
                                      ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace qmatroid
