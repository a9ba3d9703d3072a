#include <cstdlib>
#include <string>

#include "doctest.h"
#include "pointex/pointex.h"

namespace {

const char* kQuantum = "field: QQ\nvars: x, y\nrelations:\n  x*y - 3*y*x\n";

std::string run_json(px_session* s, const char* sub) {
  px_result* r = nullptr;
  REQUIRE(px_run(s, sub, &r) == PX_OK);
  std::string out = px_result_json(r);
  px_result_free(r);
  return out;
}

}  // namespace

TEST_CASE("sessions run subcommands") {
  px_session* s = nullptr;
  REQUIRE(px_session_from_text(kQuantum, &s) == PX_OK);
  CHECK(std::string(px_session_presentation(s)).find("vars: x, y") != std::string::npos);
  CHECK(px_set_option(s, "length", "3") == PX_OK);
  px_result* r = nullptr;
  REQUIRE(px_run(s, "resolve", &r) == PX_OK);
  CHECK(std::string(px_result_json(r)).find("\"tool_version\"") != std::string::npos);
  CHECK(std::string(px_result_text(r)).rfind("pointex ", 0) == 0);
  px_result_free(r);
  CHECK(run_json(s, "check-g1") == run_json(s, "check-g1"));
  px_session_free(s);
  CHECK(px_subcommand_count() == 8);
  CHECK(std::string(px_subcommand_name(0)) == "resolve");
  CHECK(px_subcommand_name(8) == nullptr);
  CHECK(std::string(px_version()) == "0.1.0");
}

TEST_CASE("status codes") {
  px_session* s = nullptr;
  CHECK(px_session_from_text(nullptr, &s) == PX_ERR_NULL);
  CHECK(px_session_from_text("vars: x\nrelations:\n  x+*x\n", &s) == PX_ERR_INPUT);
  CHECK(s == nullptr);
  CHECK(std::string(px_last_error()).find("line 3") != std::string::npos);
  CHECK(px_session_from_file("/nonexistent/file.px", &s) == PX_ERR_INPUT);

  REQUIRE(px_session_from_text(kQuantum, &s) == PX_OK);
  CHECK(px_set_option(s, "length", "-1") == PX_ERR_INPUT);
  CHECK(px_set_option(s, "colour", "red") == PX_ERR_INPUT);
  CHECK(px_set_option(s, "side", "up") == PX_ERR_INPUT);
  CHECK(px_set_option(s, "order", "nonsense") == PX_ERR_INPUT);
  px_result* r = nullptr;
  CHECK(px_run(s, "nothing", &r) == PX_ERR_INPUT);
  CHECK(r == nullptr);
  CHECK(px_run(s, "sigma", &r) == PX_ERR_INPUT);
  CHECK(std::string(px_last_error()).find("--point") != std::string::npos);
  px_session_free(s);
}

TEST_CASE("degree cap from the environment, overridden by an explicit option") {
  setenv("POINTEX_DEGREE_CAP", "5", 1);
  px_session* s = nullptr;
  REQUIRE(px_session_from_text(kQuantum, &s) == PX_OK);
  CHECK(run_json(s, "resolve").find("\"cap\": 5") != std::string::npos);
  REQUIRE(px_set_option(s, "cap", "7") == PX_OK);
  CHECK(run_json(s, "resolve").find("\"cap\": 7") != std::string::npos);
  px_session_free(s);
  setenv("POINTEX_DEGREE_CAP", "many", 1);
  CHECK(px_session_from_text(kQuantum, &s) == PX_ERR_INPUT);
  unsetenv("POINTEX_DEGREE_CAP");
}
