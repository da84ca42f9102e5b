#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "toricapprox/cli.hpp"

using namespace toric;

namespace {

const std::string kData = TORICAPPROX_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  auto r = run({"decide", "m-approx", "--fan", kData + "/p2.json", "--cond", kData + "/darmon235.json", "--field",
                kData + "/q.json", "--off-t"});
  CHECK(r.code == 0);
  CHECK(r.out.find(": YES") != std::string::npos);

  r = run({"pi1", "--fan", kData + "/p1.json", "--m", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[2]\n", 0) == 0);

  r = run({"validate", "--fan", kData + "/bad.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("non-primitive") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"decide", "m-approx", "--fan", "h2", "--cond", "darmon:2,2,2,2", "--assert"}).code == 1);
  CHECK(run({"decide", "m-approx", "--fan", "h2", "--cond", "darmon:2,2,2,2"}).code == 0);
  CHECK(run({"decide", "m-approx", "--fan", "h2", "--cond", "darmon:2,2"}).code == 2);
  CHECK(run({"decide", "m-approx", "--fan", "p2", "--cond", "{oops"}).code == 2);
  CHECK(run({"decide", "m-approx", "--fan", "p2", "--cond", "campana:2", "--field", "fq6"}).code == 2);
  CHECK(run({"decide", "nonsense", "--fan", "p2", "--cond", "any"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-point", "--fan", "p2", "--cond", "union_of_axes", "--point", "2,3,5", "--assert"}).code == 0);
  CHECK(run({"check-point", "--fan", "p2", "--cond", "union_of_axes", "--point", "2,4,5", "--assert"}).code == 1);
  CHECK(run({"decide", "thinness", "--fan", "p1", "--cond", "darmon:2,2", "--assert"}).code == 1);
  CHECK(run({"decide", "m-approx", "--fan", "p1", "--cond", "darmon:2,3", "--off-t", "--t-empty"}).code == 2);

  // scan cap exhausted -> computational defect
  setenv("TORICAPPROX_SCAN_CAP", "1", 1);
  auto r = run({"approximate", "--squarefree", "--constraint", "2:4:3", "--count", "5"});
  unsetenv("TORICAPPROX_SCAN_CAP");
  CHECK(r.code == 3);
  CHECK(r.err.find("defect") != std::string::npos);
}

TEST_CASE("json output round-trips through the schemas") {
  auto r = run({"--json", "decide", "m-approx", "--fan", "h2", "--cond", "darmon:2,3,1,1"});
  REQUIRE(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(to_json(verdict_from_json(j)) == j);

  r = run({"enumerate", "--fan", "p1", "--cond", "campana:2,2", "--height", "9", "--json"});
  REQUIRE(r.code == 0);
  j = parse_json(r.out);
  CHECK(j["count"] == 24);
  CHECK(to_json(census_from_json(j)) == j);

  r = run({"validate", "--fan", "h3", "--cond", "campana:2", "--json"});
  REQUIRE(r.code == 0);
  j = parse_json(r.out);
  CHECK(j["class_group"]["free_rank"] == 2);
  CHECK(to_json(multiplicity_set_from_json(j["conditions"])) == j["conditions"]);
  CHECK(to_json(field_from_json(j["field"])) == j["field"]);

  r = run({"--json", "validate", "--fan", kData + "/bad.json"});
  CHECK(r.code == 2);
  CHECK(parse_json(r.err).contains("diagnostics"));
}

TEST_CASE("subcommands") {
  auto r = run({"enumerate", "--fan", "p1", "--cond", "darmon:2", "--height", "9", "--format", "csv", "--threads", "3"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);

  r = run({"--json", "approximate", "--fan", "p2", "--cond", "campana:2", "--targets", kData + "/targets_p2.json"});
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out)["verified"] == true);

  r = run({"crosscheck", "--fan", "p1", "--cond", "darmon:2,3", "--height", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 divergences") != std::string::npos);

  r = run({"--json", "analyze", "--fan", "p11r2", "--cond", "darmon:2,2,3"});
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out)["invariants"]["index"] == 2);

  r = run({"decide", "strong-approx", "--fan", "h2", "--removed", "1,3", "--json"});
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out)["holds"] == "NO");

  r = run({"pi1", "--fan", "p2", "--m", "2,2,2"});
  CHECK(r.out.rfind("[2,2]", 0) == 0);
  r = run({"pi1", "--fan", "p1", "--m", "2,3"});
  CHECK(r.out.rfind("[]", 0) == 0);

  for (auto& args : std::vector<std::vector<std::string>>{
           {"example", "hirzebruch", "--r", "2", "--m", "2,2,2,2"},
           {"example", "p11r", "--r", "2", "--m", "2,3,7"},
           {"example", "pn-darmon", "--m", "2,3,5"},
           {"example", "affine-space", "--d", "2", "--t-empty"}}) {
    r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out.find("agree") != std::string::npos);
  }
  CHECK(run({"example", "hirzebruch", "--r", "2", "--m", "2,2,2,2", "--assert"}).code == 1);
  CHECK(run({"example", "nope"}).code == 2);
}
