#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "pqseq/cli.hpp"

using namespace pqseq;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"pqseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = cli_main((int)argv.size(), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("klc prints the plain value") {
  auto r = invoke({"klc", "--p", "3", "--w", "2", "--set", "2", "--field", "f2", "--k", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "7\n");
}

TEST_CASE("lc over both fields") {
  auto f2 = invoke({"lc", "--p", "3", "--w", "2", "--set", "2", "--field", "f2"});
  CHECK(f2.status == kExitOk);
  CHECK(f2.out == "8\n");
  auto fp = invoke({"lc", "--p", "3", "--w", "2", "--set", "2", "--field", "fp"});
  CHECK(fp.out == "9\n");
}

TEST_CASE("spectrum emits the pinned csv schema") {
  auto r = invoke({"spectrum", "--p", "3", "--w", "2", "--set", "2", "--field", "f2",
                   "--k-max", "2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "k,lc,method\n0,8,exhaustive\n1,7,exhaustive\n2,0,exhaustive\n");

  auto r2 = invoke({"spectrum", "--p", "3", "--w", "1", "--set", "1", "--field", "f2",
                    "--k-max", "3", "--format", "csv"});
  CHECK(r2.out == "k,lc,method\n0,7,exhaustive\n1,7,exhaustive\n2,7,exhaustive\n3,0,exhaustive\n");
}

TEST_CASE("spectrum default range ends at the weight") {
  auto r = invoke({"spectrum", "--p", "3", "--w", "2", "--set", "2", "--field", "f2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "k,lc,method\n0,8,exhaustive\n1,7,exhaustive\n2,0,exhaustive\n");
}

TEST_CASE("json output is stable and parseable") {
  std::vector<std::string> args{"spectrum", "--p", "3", "--w", "2", "--set", "2",
                                "--field", "f2", "--k-max", "2", "--format", "json"};
  auto r1 = invoke(args);
  auto r2 = invoke(args);
  CHECK(r1.status == kExitOk);
  CHECK(r1.out == r2.out);  // byte-identical reruns
  auto doc = nlohmann::json::parse(r1.out);
  CHECK(doc["command"] == "spectrum");
  CHECK(doc["points"].size() == 3);
  CHECK(doc["points"][0]["lc"] == 8);
  CHECK(doc["points"][2]["method"] == "exhaustive");
  CHECK_FALSE(doc["truncated"].get<bool>());
}

TEST_CASE("generate emits one period") {
  auto r = invoke({"generate", "--p", "3", "--w", "2", "--set", "2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.substr(0, 9) == "u,symbol\n");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);  // header + 9 rows

  auto j = invoke({"generate", "--p", "3", "--w", "2", "--set", "2", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["period"] == 9);
  CHECK(doc["weight"] == 2);
  CHECK(doc["symbols"] == nlohmann::json::array({0, 0, 0, 0, 1, 1, 0, 0, 0}));
}

TEST_CASE("named index sets expand deterministically") {
  auto thr = invoke({"generate", "--p", "5", "--w", "2", "--set", "threshold", "--format",
                     "json"});
  auto leg = invoke({"generate", "--p", "5", "--w", "2", "--set", "legendre", "--format",
                     "json"});
  auto thr_doc = nlohmann::json::parse(thr.out);
  auto leg_doc = nlohmann::json::parse(leg.out);
  CHECK(thr_doc["label"] == "indicator{3,4}");
  CHECK(leg_doc["label"] == "indicator{2,3}");

  CHECK(expand_index_set("threshold", 7) == std::vector<uint32_t>{4, 5, 6});
  CHECK(expand_index_set("legendre", 7) == std::vector<uint32_t>{3, 5, 6});
  CHECK(expand_index_set("0,2", 5) == std::vector<uint32_t>{0, 2});
  CHECK_THROWS_AS(expand_index_set("", 5), std::invalid_argument);
  CHECK_THROWS_AS(expand_index_set("5", 5), std::invalid_argument);
  CHECK_THROWS_AS(expand_index_set("x", 5), std::invalid_argument);
}

TEST_CASE("complement flag builds the complement-style sequence") {
  auto r = invoke({"lc", "--p", "3", "--w", "2", "--set", "2", "--complement"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "7\n");
}

TEST_CASE("verify exits zero on success and one on mismatch") {
  auto ok = invoke({"verify", "--theorem", "thm1", "--p", "5", "--w", "2", "--set", "1"});
  CHECK(ok.status == kExitOk);
  CHECK(ok.out.substr(0, 52) ==
        "k,expected,expected_method,exhaustive,exhaustive_alt");

  auto bad = invoke({"verify", "--theorem", "complement", "--p", "3", "--w", "2", "--set", "2"});
  CHECK(bad.status == kExitMismatch);
  CHECK(bad.out.find("mismatch") != std::string::npos);
  CHECK(bad.err.find("mismatch") != std::string::npos);

  auto json_report = invoke({"verify", "--theorem", "thm4", "--p", "3", "--w", "1", "--set", "1",
                             "--format", "json"});
  CHECK(json_report.status == kExitOk);
  auto doc = nlohmann::json::parse(json_report.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["theorem"] == "thm4");
  CHECK(doc["field"] == "fp");
}

TEST_CASE("configuration errors exit with status two") {
  CHECK(invoke({"lc", "--p", "9", "--w", "2", "--set", "1"}).status == kExitConfig);
  CHECK(invoke({"lc", "--p", "5", "--w", "5", "--set", "1"}).status == kExitConfig);
  CHECK(invoke({"lc", "--p", "5", "--w", "2", "--set", "7"}).status == kExitConfig);
  CHECK(invoke({"lc", "--p", "5", "--w", "2"}).status == kExitConfig);  // missing set
  CHECK(invoke({"klc", "--p", "5", "--w", "2", "--set", "1"}).status == kExitConfig);  // no k
  CHECK(invoke({"verify", "--theorem", "bogus", "--p", "5", "--w", "2"}).status == kExitConfig);
  CHECK(invoke({"verify", "--theorem", "thm1", "--p", "7", "--w", "2", "--set", "1"}).status ==
        kExitConfig);  // hypothesis fails
  CHECK(invoke({"verify", "--theorem", "thm1", "--p", "5", "--w", "2", "--set", "1", "--field",
                "fp"}).status == kExitConfig);  // contradictory field
  CHECK(invoke({"nonsense"}).status == kExitConfig);
}

TEST_CASE("budget exhaustion exits with status three") {
  auto r = invoke({"klc", "--p", "5", "--w", "2", "--set", "1,2", "--k", "4", "--budget", "100"});
  CHECK(r.status == kExitBudget);
  CHECK(r.err.find("budget") != std::string::npos);

  auto sp = invoke({"spectrum", "--p", "5", "--w", "2", "--set", "1,2", "--k-max", "8",
                    "--budget", "1000"});
  CHECK(sp.status == kExitBudget);
  CHECK(sp.out.substr(0, 12) == "k,lc,method\n");       // partial artifact still emitted
  CHECK(sp.err.find("truncated") != std::string::npos);
}

TEST_CASE("environment variable provides the default budget") {
  setenv("PQSEQ_BUDGET", "50", 1);
  auto r = invoke({"klc", "--p", "5", "--w", "2", "--set", "1,2", "--k", "3"});
  CHECK(r.status == kExitBudget);
  auto r2 = invoke({"klc", "--p", "5", "--w", "2", "--set", "1,2", "--k", "3", "--budget",
                    "100000"});
  CHECK(r2.status == kExitOk);  // explicit flag wins
  setenv("PQSEQ_BUDGET", "not-a-number", 1);
  CHECK(invoke({"lc", "--p", "3", "--w", "1", "--set", "1"}).status == kExitConfig);
  unsetenv("PQSEQ_BUDGET");
}

TEST_CASE("output lands in a file when requested") {
  std::string path = "/tmp/pqseq_test_spectrum.csv";
  std::remove(path.c_str());
  auto r = invoke({"spectrum", "--p", "3", "--w", "2", "--set", "2", "--k-max", "2", "--out",
                   path});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "k,lc,method\n0,8,exhaustive\n1,7,exhaustive\n2,0,exhaustive\n");
  std::remove(path.c_str());
}
