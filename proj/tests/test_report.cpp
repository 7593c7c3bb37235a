#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>
#include <vector>

#include "qmatroid/errors.hpp"
#include "qmatroid/report.hpp"

using namespace qmatroid;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

std::vector<CheckRecord> sample() {
  return {
      {"dual-char-by-restrictions", "u24", "q=5", "8", "8", true, ""},
      {"charsum", "u24", "q=9 conv=characteristic", "48", "-32", false,
       "gauss weight sign differs between conventions"},
      {"fourier-duality", "c4", "q=3 a=2 b=5", "197073", "197073", true, ""},
  };
}

}  // namespace

TEST_CASE("text rendering") {
  const std::string text = render_text(sample());
  CHECK(text.rfind(std::string(kReportHeader) + "\n", 0) == 0);
  CHECK(text.find("pass dual-char-by-restrictions u24 q=5 lhs=8 rhs=8\n") !=
        std::string::npos);
  CHECK(text.find("FAIL charsum u24") != std::string::npos);
  CHECK(text.find("-- gauss weight sign differs") != std::string::npos);
  // Passing records carry no note marker.
  CHECK(text.find("rhs=8 --") == std::string::npos);

  CHECK(render_text({}) == std::string(kReportHeader) + "\n");
}

TEST_CASE("structured round trip") {
  const std::vector<CheckRecord> records = sample();
  const std::string once = render_structured(records);
  CHECK(once.rfind(std::string(kReportHeader) + "\n", 0) == 0);

  const std::vector<CheckRecord> parsed = parse_structured(once);
  CHECK(parsed == records);
  CHECK(render_structured(parsed) == once);

  CHECK(parse_structured(render_structured({})).empty());
}

TEST_CASE("structured parsing rejects bad input") {
  CHECK(kind_of([] { parse_structured(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_structured("qmatroid-report v2\n"); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_structured(std::string(kReportHeader) + "\nnot json\n");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_structured(std::string(kReportHeader) + "\n[1,2]\n");
        }) == ErrorKind::ParseError);
  // A record missing a field is malformed even though it is valid JSON.
  CHECK(kind_of([] {
          parse_structured(std::string(kReportHeader) +
                           "\n{\"check\":\"x\"}\n");
        }) == ErrorKind::ParseError);
}
