#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "pointex/pipeline.hpp"

using namespace pointex;
using namespace fixtures;
using nlohmann::json;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_presentation_file(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

json run(const std::string& text, const std::string& sub, RunConfig cfg = {}) {
  return json::parse(run_pipeline(parse_presentation_file(text), sub, cfg).json);
}

const char* kQuantum = "field: QQ\nvars: x, y\nrelations:\n  x*y - 3*y*x\n";
const char* kCyclic =
    "# cyclic\nfield: QQ\nvars: x, y, z\nrelations:\n  x*y + y*x + 2*z^2\n  y*z + z*y + 2*x^2; z*x + x*z + 2*y^2\n";

}  // namespace

TEST_CASE("presentation files parse into the expected algebras") {
  CHECK(parse_presentation_file(kQuantum).presentation == quantum_plane(3));
  CHECK(parse_presentation_file(kCyclic).presentation == three_dim_cyclic());
  // x_j x_i - q_ij x_i x_j with q_12 = 1/3 is x y - 3 y x up to scalar
  PresentationFile s = parse_presentation_file("vars: x, y\nskew:\n  1 1/3\n  3 1\n");
  CHECK(s.presentation == quantum_plane(3));
  REQUIRE(s.skew);
  CHECK((*s.skew)(0, 1) == Scalar(1, 3));
  PresentationFile c2 = parse_presentation_file(
      "vars: x1, x2, x3, x4\nskew:\n 1,-1,-1,1\n -1,1,-1,-1\n -1,-1,1,-1\n 1,-1,-1,1\n");
  CHECK(c2.presentation == case2());
  CHECK(c2.presentation.relations().size() == 6);
  PresentationFile mod = parse_presentation_file("field: 7\nvars: x, y\nrelations: x*y - 3*y*x\n");
  CHECK(mod.presentation.field().characteristic == 7);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(error_of("vars: x, y\nrelations:\n  x+*y\n").rfind("line 3, col 5", 0) == 0);
  CHECK(error_of("vars: x, y\nrelations:\n  x*y + x\n").find("not homogeneous") != std::string::npos);
  CHECK(error_of("vars: x, y\nrelations:\n  x*y*x\n").find("not quadratic") != std::string::npos);
  CHECK(error_of("vars: x, y\nskew:\n  1 2\n  2 1\n").find("q_ji") != std::string::npos);
  CHECK(error_of("vars: x, y\nskew:\n  2 2\n  1/2 1\n").find("q_ii") != std::string::npos);
  CHECK(error_of("vars: x, y\nskew:\n  1 0\n  0 1\n").find("nonzero") != std::string::npos);
  CHECK(error_of("vars: x, y\nskew:\n  1 2\n").find("rows") != std::string::npos);
  CHECK(error_of("field: 6\nvars: x\n").rfind("line 1, col 8", 0) == 0);
  CHECK(error_of("relations:\n  x*y\n").find("missing 'vars'") != std::string::npos);
  CHECK(error_of("vars: x\ncolour: red\n").rfind("line 2, col 1", 0) == 0);
  CHECK(error_of("vars: x, x\n").find("duplicate") != std::string::npos);
  CHECK(error_of("vars: x, 2y\n").rfind("line 1, col 10", 0) == 0);
  CHECK(error_of("vars: x, y\nrelations:\n  x*q\n").rfind("line 3", 0) == 0);
}

TEST_CASE("serialize then parse is the identity") {
  for (const Presentation& p : {quantum_plane(3), three_dim_cyclic(), case2(), case3(),
                                skew(3, {Scalar(2, 7), Scalar(-3), Scalar(5)})}) {
    std::string text = serialize_presentation(p);
    Presentation back = parse_presentation_file(text).presentation;
    CHECK(back == p);
    CHECK(serialize_presentation(back) == text);
  }
}

TEST_CASE("reports are deterministic and versioned") {
  RunConfig cfg;
  cfg.length = 3;
  cfg.cap = 5;
  for (const std::string& sub : {"resolve", "point-variety", "check-g1", "report"}) {
    RunOutput a = run_pipeline(parse_presentation_file(kCyclic), sub, cfg);
    RunOutput b = run_pipeline(parse_presentation_file(kCyclic), sub, cfg);
    CHECK(a.json == b.json);
    CHECK(a.text == b.text);
    json j = json::parse(a.json);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["config"]["subcommand"] == sub);
    CHECK(j.contains("results"));
  }
}

TEST_CASE("check-g1 on the quantum plane") {
  json r = run(kQuantum, "check-g1")["results"]["g1"];
  CHECK(r["holds"] == true);
  CHECK(r["E_is_whole_space"] == true);
  // sigma(a:b) = (a : 3b) for x y = 3 y x
  bool seen = false;
  for (const json& row : r["sigma_samples"])
    if (row["p"] == json::array({"1", "1"})) {
      CHECK(row["sigma"] == json::array({"1", "3"}));
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("point-variety after a quotient reports separating points") {
  RunConfig cfg;
  cfg.element = "x*y";
  json r = run(kCyclic, "point-variety", cfg)["results"];
  CHECK(r["method"] == "linear");
  CHECK(r["quotient_by"]["normal"] == false);
  CHECK(r["semi_standard"] == false);
  CHECK(!r["witness"].is_null());
  bool found = false;
  for (const json& s : r["separating_unit_points"])
    if (s["point"] == json::array({"1", "0", "-1"})) {
      CHECK(s["on"] == "right");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("quotient and shamash subcommands") {
  const std::string c3 = serialize_presentation(case3());
  RunConfig cfg;
  cfg.element = "x1^2 + x2^2 + x3^2 + x4^2";
  cfg.length = 4;
  cfg.cap = 6;
  json q = run(c3, "quotient", cfg)["results"];
  CHECK(q["normal"] == true);
  CHECK(q["regular"] == true);
  CHECK(q["algebra"]["hilbert"] == json::array({1, 4, 9, 16, 25}));
  Presentation b = parse_presentation_file(q["presentation"].get<std::string>()).presentation;
  CHECK(b.relations().size() == 7);

  json s = run(c3, "shamash", cfg)["results"];
  for (const char* side : {"right", "left"}) {
    CHECK(s[side]["ranks"] == s[side]["expected_ranks"]);
    CHECK(s[side]["verification"]["exact"] == true);
    CHECK(s[side]["homotopy_identities"]["checked"] == s[side]["homotopy_identities"]["held"]);
  }
  // every quadratic monomial is central here, so take a non-normal element elsewhere
  cfg.element = "x1*x2 + x1*x3";
  CHECK_THROWS_AS(run(serialize_presentation(case2()), "shamash", cfg), InputError);
  cfg.element = "";
  CHECK_THROWS_AS(run(c3, "quotient", cfg), InputError);
}

TEST_CASE("sigma subcommand") {
  RunConfig cfg;
  cfg.point = "1, 1";
  cfg.length = 2;
  json r = run(kQuantum, "sigma", cfg)["results"];
  CHECK(r["sigma"] == json::array({"1", "3"}));
  CHECK(r["pointwise"]["exact"] == true);
  cfg.point = "1, 1, 1";
  CHECK_THROWS_AS(run(kQuantum, "sigma", cfg), InputError);
  // off E for the +-1 skew algebra
  cfg.point = "1, 1, 1, 1";
  CHECK_THROWS_AS(run(serialize_presentation(case3()), "sigma", cfg), InputError);
}

TEST_CASE("bad configuration is an input error") {
  RunConfig cfg;
  CHECK_THROWS_AS(run(kQuantum, "frobnicate", cfg), InputError);
  cfg.side = "up";
  CHECK_THROWS_AS(run(kQuantum, "resolve", cfg), InputError);
  cfg.side = "both";
  cfg.length = 0;
  CHECK_THROWS_AS(run(kQuantum, "resolve", cfg), InputError);
}
