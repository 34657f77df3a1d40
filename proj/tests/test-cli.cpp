#include <filesystem>  // for temp_directory_path
#include <fstream>     // for ofstream, ifstream
#include <sstream>     // for ostringstream

#include <unistd.h>  // for getpid

#include "catch_amalgamated.hpp"

#include "json.hpp"

#include "polycyc/error.hpp"
#include "polycyc/checks.hpp"
#include "polycyc/cli.hpp"
#include "polycyc/congruence.hpp"
#include "polycyc/text.hpp"

namespace polycyc {

  namespace {
    struct Result {
      int         code;
      std::string out;
      std::string err;
    };

    Result run(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int                code = cli::run(args, out, err);
      return {code, out.str(), err.str()};
    }

    std::filesystem::path temp_file(std::string const& name) {
      return std::filesystem::temp_directory_path()
             / ("polycyc-test-" + std::to_string(::getpid()) + "-" + name);
    }
  }  // namespace

  TEST_CASE("eval", "[cli]") {
    auto r = run({"eval", "p0", "p0'"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "1\n");
    REQUIRE(run({"eval", "p0 p1"}).out == "(|1,0)\n");
    REQUIRE(run({"eval", "p0 p1'"}).out == "0\n");
    REQUIRE(run({"eval", "(0|1) * (1,2|0)"}).out == "(0,2|0)\n");
    REQUIRE(run({"--json", "eval", "p0"}).out == "{\"element\":\"(|0)\"}\n");
    REQUIRE(run({"eval", "p0", "--json"}).out == "{\"element\":\"(|0)\"}\n");

    auto bad = run({"eval", "p0 q1"});
    REQUIRE(bad.code == 2);
    REQUIRE(bad.err.find("offset 3") != std::string::npos);
  }

  TEST_CASE("reduce", "[cli]") {
    REQUIRE(run({"reduce", "p0 p1 p1' p0'"}).out == "1\n");
    REQUIRE(run({"reduce", "p0 p1'"}).out == "0\n");
    REQUIRE(run({"reduce", "p0' p2 p1 p1'"}).out == "p0' p2\n");
  }

  TEST_CASE("solve", "[cli]") {
    auto r = run({"solve", "--side", "right", "(|0)", "(|0,0)"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "(|0)\n(0|0,0)\n");
    REQUIRE(run({"solve", "--side", "left", "(0|)", "1"}).out == "(|0)\n");
    REQUIRE(run({"solve", "(|0)", "0"}).code == 2);
    REQUIRE(run({"solve", "--side", "up", "(|0)", "1"}).code == 2);
    REQUIRE(run({"--json", "solve", "(|0)", "(|0,0)"}).out
            == "{\"side\":\"right\",\"solutions\":[\"(|0)\",\"(0|0,0)\"]}\n");
  }

  TEST_CASE("green and order", "[cli]") {
    REQUIRE(run({"green", "(0|1)", "(0|2,2)", "--rel", "R"}).out == "true\n");
    REQUIRE(run({"green", "(0|1)", "(1|1)"}).out
            == "R false\nL true\nH false\nD true\nJ true\n");
    REQUIRE(run({"order", "(0,1|1,1)", "(0|1)"}).out == "true\n");
    REQUIRE(run({"order", "(0|1)", "(1|0)"}).out == "false\n");
    REQUIRE(run({"order", "(0,1,1|0,1,1)", "--up"}).out
            == "1\n(0|0)\n(0,1|0,1)\n(0,1,1|0,1,1)\n");
    REQUIRE(run({"order", "1", "--children", "2"}).out == "(0|0)\n(1|1)\n");
    REQUIRE(run({"order", "0", "--up"}).code == 2);
    REQUIRE(run({"order", "(0|1)"}).code == 2);
  }

  TEST_CASE("embed", "[cli]") {
    REQUIRE(run({"embed", "matrix", "2", "3"}).out == "(1,1,0|1,1,1,0)\n");
    REQUIRE(run({"--json", "embed", "matrix", "2", "3"}).out
            == "{\"element\":\"(1,1,0|1,1,1,0)\",\"unit\":\"[2,3]\"}\n");
    REQUIRE(run({"embed", "bicyclic", "0,1", "1", "2"}).out
            == "(0,1|0,1,0,1)\n");
    REQUIRE(run({"embed", "bicyclic", "", "1", "2"}).code == 2);
    REQUIRE(run({"embed", "p1", "2", "3"}).out == "(0,0|0,0,0)\n");
    REQUIRE(run({"embed", "support", "(0,1|2)"}).out == "0,1,2\n");
    REQUIRE(run({"embed"}).code == 2);
  }

  TEST_CASE("witness and verify", "[cli]") {
    auto const path = temp_file("trace.json");
    auto       w    = run({"witness", "(0|0)", "0", "-o", path.string()});
    REQUIRE(w.code == 0);
    auto v = run({"verify", path.string()});
    REQUIRE(v.code == 0);
    REQUIRE(v.out == "ok\n");

    // Tamper with step 1's product.
    std::ifstream in(path);
    auto          doc = nlohmann::json::parse(in);
    in.close();
    doc["steps"][1]["pair"][0] = "(|1)";
    std::ofstream(path) << doc.dump();
    auto bad = run({"verify", path.string()});
    REQUIRE(bad.code == 1);
    REQUIRE(bad.out.find("step 1") != std::string::npos);

    doc["steps"][1]["rule"]["type"] = "inv";
    std::ofstream(path) << doc.dump();
    REQUIRE(run({"verify", path.string()}).code == 1);

    std::ofstream(path) << "{ not json";
    REQUIRE(run({"verify", path.string()}).code == 2);
    std::filesystem::remove(path);

    REQUIRE(run({"verify", "/nonexistent/trace.json"}).code == 2);
    REQUIRE(run({"witness", "1", "1"}).code == 2);

    auto universal = run({"witness", "(|0)", "(|1)", "--to", "(0|1)", "(1|1)"});
    REQUIRE(universal.code == 0);
    auto const t = trace_from_json(universal.out);
    REQUIRE(verify_trace(t).ok);
    REQUIRE(format_element(t.goal.first) == "(0|1)");
  }

  TEST_CASE("nbhd", "[cli]") {
    auto r = run({"nbhd", "--point", "(|0)", "--exclude", "(|0,0)"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "(|0)\n(0|0,0)\n");
    REQUIRE(run({"nbhd", "--point", "(0|)", "--left", "--exclude", "1"}).out
            == "(|0)\n");
    REQUIRE(run({"nbhd", "--point", "(|0)", "--inverse", "--exclude",
                 "(0|1); (1|1)"})
                .out
            == "(1|0)\n(1|1)\n");
    auto s = run({"nbhd", "--point", "(|0)", "--exclude", "(|0,0);(1|1)",
                  "--check-samples", "1000"});
    REQUIRE(s.code == 0);
    REQUIRE(s.err == "checked 1000 samples, 0 failures\n");
    REQUIRE(run({"nbhd", "--point", "0", "--exclude", "(|0)"}).code == 2);
    REQUIRE(run({"nbhd", "--point", "(|0)", "--exclude", "0"}).code == 2);
    REQUIRE(run({"nbhd", "--exclude", "(|0)"}).code == 2);
  }

  TEST_CASE("check", "[cli]") {
    auto r = run({"check", "--suite", "core", "--max-len", "2", "--alphabet", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("core: ") == 0);
    REQUIRE(r.out.find("FAIL") == std::string::npos);

    auto c = run({"--json", "check", "--suite", "congruence"});
    REQUIRE(c.code == 0);
    auto const doc = nlohmann::json::parse(c.out);
    REQUIRE(doc["ok"] == true);
    REQUIRE(doc["suites"][0]["properties"][0]["cases"] == 2450);

    REQUIRE(run({"check", "--alphabet", "1"}).code == 2);
    REQUIRE(run({"check", "--suite", "nope"}).code == 2);
    REQUIRE(run({"check", "--bogus"}).code == 2);
  }

  TEST_CASE("output is deterministic", "[cli]") {
    std::vector<std::string> const args{"check", "--suite", "topology"};
    REQUIRE(run(args).out == run(args).out);
    std::vector<std::string> const w{"witness", "(0,1|1)", "(1|0,0)"};
    REQUIRE(run(w).out == run(w).out);
  }

  TEST_CASE("usage errors", "[cli]") {
    REQUIRE(run({}).code == 2);
    REQUIRE(run({"frobnicate"}).code == 2);
    REQUIRE(run({"eval", "--nope"}).code == 2);
    REQUIRE(run({"--help"}).code == 0);
  }

  TEST_CASE("run_checks", "[cli][checks]") {
    auto const reports = run_checks("all", CheckOptions{});
    REQUIRE(reports.size() == check_suites().size());
    for (auto const& r : reports) {
      INFO(r.suite);
      REQUIRE(r.ok());
      REQUIRE(r.cases() > 0);
    }
    CheckOptions three;
    three.alphabet = 3;
    three.max_len  = 1;
    for (auto const& r : run_checks("all", three)) {
      INFO(r.suite);
      REQUIRE(r.ok());
    }
    REQUIRE_THROWS_AS(run_checks("all", CheckOptions{0, 2, 1}), polycyc::Error);
  }

}  // namespace polycyc
