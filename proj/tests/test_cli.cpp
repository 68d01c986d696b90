#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gog/shipped.hpp"
#include "gog/spec_io.hpp"
#include "support.hpp"

using namespace gog;
using testsupport::run_cli;
using testsupport::spec_path;

TEST_CASE("census text output is exact") {
  const auto r = run_cli({"census", spec_path("circle.json"), "--from", "v0", "--to", "v0",
                          "--stages", "3"});
  CHECK(r.exit_code == 0);
  const std::string expected = "# spec " + shipped("circle").file.digest +
                               "\n"
                               "# census from v0 to v0 stages 3\n"
                               "# baseline 0\n"
                               "# lengths 0 2 4\n"
                               "n z j new_reduced r\n"
                               "0 1 0 1 1\n"
                               "2 4 2 2 3\n"
                               "4 16 14 2 5\n";
  CHECK(r.output == expected);
}

TEST_CASE("census edge basepoints and json shape") {
  const auto r = run_cli({"census", spec_path("z3_hnn.json"), "--from", "e0", "--to", "e0",
                          "--stages", "2", "--json"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"command\": \"census\"") != std::string::npos);
  CHECK(r.output.find("\"baseline\": 3") != std::string::npos);
  CHECK(r.output.find("\"length\": 2") != std::string::npos);
  CHECK(r.output.find("\"length\": 4") != std::string::npos);
  CHECK(r.output.find("\"spec_digest\": \"" + shipped("z3_hnn").file.digest + "\"") !=
        std::string::npos);
}

TEST_CASE("word equality through the cli") {
  const auto r =
      run_cli({"word-eq", spec_path("z3_hnn.json"), "0 t0+ 1 t0- 0", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "true\nlhs: 2\nrhs: 2\n");

  const auto rf = run_cli({"word-eq", spec_path("z3_hnn.json"), "1", "2"});
  CHECK(rf.exit_code == 0);
  CHECK(rf.output.substr(0, 6) == "false\n");
}

TEST_CASE("alternating amalgam words") {
  const auto r = run_cli({"word-eq", spec_path("sl2z_amalgam.json"), "G:2", "H:3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "true\nlhs: 2\nrhs: 2\n");

  const auto rf = run_cli({"word-eq", spec_path("sl2z_amalgam.json"), "G:1", "H:1"});
  CHECK(rf.exit_code == 0);
  CHECK(rf.output.substr(0, 6) == "false\n");

  // alternating words are based at the left vertex
  const auto bad = run_cli({"word-eq", spec_path("sl2z_amalgam.json"), "--from", "v1",
                            "G:2", "H:3"});
  CHECK(bad.exit_code == 2);

  const auto rep = run_cli({"word-eq", spec_path("sl2z_amalgam.json"), "G:1 G:2", "G:3"});
  CHECK(rep.exit_code == 2);
}

TEST_CASE("normal form json is byte stable") {
  const std::vector<std::string> args = {"normal-form", spec_path("sl2z_amalgam.json"),
                                         "H:3 G:2 H:3", "--json"};
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  const std::string expected = "{\n"
                               "  \"command\": \"normal-form\",\n"
                               "  \"spec_digest\": \"" +
                               shipped("sl2z_amalgam").file.digest +
                               "\",\n"
                               "  \"flags\": {\n"
                               "    \"from\": \"v0\",\n"
                               "    \"word\": \"H:3 G:2 H:3\"\n"
                               "  },\n"
                               "  \"canonical\": \"2\",\n"
                               "  \"crossings\": 0,\n"
                               "  \"start\": \"v0\",\n"
                               "  \"end\": \"v0\"\n"
                               "}\n";
  CHECK(r1.output == expected);
}

TEST_CASE("multigraph commands") {
  CHECK(run_cli({"pi1", spec_path("circle.json")}).output == "1\n");
  CHECK(run_cli({"pi1", spec_path("theta.json")}).output == "2\n");
  CHECK(run_cli({"is-tree", spec_path("theta.json")}).output == "false\n");

  // group-valued specs are not multigraphs
  const auto r = run_cli({"pi1", spec_path("z3_hnn.json")});
  CHECK(r.exit_code == 2);
}

TEST_CASE("splitting and connectivity calculators") {
  const auto s = run_cli({"splitting", spec_path("psl2z_wedge.json"), "--length", "3"});
  CHECK(s.exit_code == 0);
  CHECK(s.output == "6\n");

  const auto sj =
      run_cli({"splitting", spec_path("psl2z_wedge.json"), "--length", "3", "--json"});
  CHECK(sj.output.find("\"counts\": [\n    1,\n    3,\n    4,\n    6\n  ]") !=
        std::string::npos);

  const auto c = run_cli({"connectivity", "--stage", "3", "--k", "0", "--l", "1", "--m", "-2"});
  CHECK(c.exit_code == 0);
  CHECK(c.output == "3\n");

  const auto ci =
      run_cli({"connectivity", "--stage", "4", "--k", "inf", "--l", "1", "--m", "0"});
  CHECK(ci.output == "inf\n");

  const auto cb =
      run_cli({"connectivity", "--stage", "1", "--k", "0", "--l", "0", "--m", "0"});
  CHECK(cb.exit_code == 2);
}

TEST_CASE("exit codes follow the error taxonomy") {
  // unreadable input
  CHECK(run_cli({"census", spec_path("missing.json"), "--from", "v0", "--to", "v0",
                 "--stages", "2"})
            .exit_code == 2);
  // budget exhaustion
  CHECK(run_cli({"census", spec_path("sl2z_amalgam.json"), "--from", "v0", "--to", "v0",
                 "--stages", "9", "--budget", "50"})
            .exit_code == 3);
  // oracle mismatch from a corrupted model
  std::string text = testsupport::read_file(spec_path("z3_hnn.json"));
  const size_t at = text.find("\"twist\": [0, 2, 1]");
  REQUIRE(at != std::string::npos);
  text.replace(at, 18, "\"twist\": [0, 1, 2]");
  const std::string tmp = "/tmp/gog_test_broken_model.json";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
  }
  CHECK(run_cli({"oracle-check", tmp}).exit_code == 4);
  std::remove(tmp.c_str());

  // errors go to stderr, stdout stays empty
  const auto quiet = run_cli({"pi1", spec_path("z3_hnn.json")}, false);
  CHECK(quiet.exit_code == 2);
  CHECK(quiet.output.empty());
}

TEST_CASE("reports are byte deterministic across runs") {
  const std::vector<std::string> args = {"census", spec_path("sl2z_amalgam.json"),
                                         "--from",  "e0",
                                         "--to",    "v1",
                                         "--stages", "4",
                                         "--json"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("oracle check runs clean on a shipped spec") {
  const auto r = run_cli({"oracle-check", spec_path("circle.json"), "--radius", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ok words") != std::string::npos);
  CHECK(r.output.find("ok pi1") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({"census", "--help"}).exit_code == 0);
  CHECK(run_cli({}).exit_code != 0);
}
