#include "qcx/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace qcx;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path(int i) { return std::string(QCX_SOURCE_DIR) + "/data/specs/example" + std::to_string(i) + ".json"; }

std::filesystem::path temp_file(const std::string& name, const std::string& content = "") {
  auto p = std::filesystem::temp_directory_path() / ("qcx_cli_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(p);
  if (!content.empty()) std::ofstream(p) << content;
  return p;
}

json error_of(const Run& r) { return json::parse(r.err)["error"]; }

}  // namespace

TEST(Cli, VerifyExamples) {
  auto r1 = run({"verify", spec_path(1)});
  EXPECT_EQ(r1.code, 0);
  EXPECT_NE(r1.out.find("[31,7,16]_4"), std::string::npos);
  EXPECT_NE(r1.out.find("[[31,17,5]]_2"), std::string::npos);
  EXPECT_NE(r1.out.find("[[32,17,5]]_2"), std::string::npos);
  auto r4 = run({"verify", spec_path(4)});
  EXPECT_EQ(r4.code, 0);
  EXPECT_NE(r4.out.find("[[14,6,7;8]]_2"), std::string::npos);
  EXPECT_NE(r4.out.find("x^7+x^4+x"), std::string::npos);
  auto r2 = run({"verify", spec_path(2)});
  EXPECT_NE(r2.out.find("[[22,10,5]]_3"), std::string::npos);
  EXPECT_NE(r2.out.find("not guaranteed by GV (code exceeds bound)"), std::string::npos);
}

TEST(Cli, JsonReportIsStable) {
  auto a = run({"verify", spec_path(5), "--json", "-"});
  auto b = run({"verify", spec_path(5), "--json", "-", "--threads", "1"});
  ASSERT_EQ(a.code, 0);
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  EXPECT_EQ(ja["schema"], 1);
  EXPECT_EQ(ja["dual"]["enumerator"]["22"], "30644469");
  ja.erase("timing_seconds");
  jb.erase("timing_seconds");
  EXPECT_EQ(ja.dump(), jb.dump());

  const auto path = temp_file("report.json");
  auto c = run({"verify", spec_path(4), "--json", path.string()});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("[[14,6,7;8]]_2"), std::string::npos);
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["eaqecc"][0]["text"], "[[14,6,7;8]]_2");
  std::filesystem::remove(path);
}

TEST(Cli, ErrorExitCodes) {
  const auto bad_g = temp_file("bad_g.json", R"({"q":2,"n":7,"f":"1","g":"111"})");
  auto r = run({"verify", bad_g.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(error_of(r)["code"], "g-not-divisor");
  EXPECT_EQ(error_of(r)["kind"], "precondition");

  const auto bad_q = temp_file("bad_q.json", R"({"q":5,"n":7,"f":"1","g":"11"})");
  r = run({"verify", bad_q.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(error_of(r)["code"], "bad-q");

  r = run({"verify", "/nonexistent/spec.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(error_of(r)["code"], "io");

  r = run({"verify", spec_path(1), "--budget", "1000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(error_of(r)["required"], "16384");

  r = run({"verify", spec_path(3)});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(error_of(r)["kind"], "budget");

  EXPECT_EQ(run({"verify", spec_path(1), "--budget", "12x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  std::filesystem::remove(bad_g);
  std::filesystem::remove(bad_q);
}

TEST(Cli, GvAndFactor) {
  auto r = run({"gv", "--q", "3", "--n", "22", "--k", "10", "--d", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "not guaranteed by GV (code exceeds bound)");
  auto j = json::parse(run({"gv", "--q", "3", "--n", "22", "--k", "10", "--d", "5", "--json", "-"}).out);
  EXPECT_EQ(j["lhs"], "597871");
  EXPECT_EQ(j["rhs"], "3845710");
  EXPECT_EQ(j["guaranteed"], false);

  auto f = json::parse(run({"factor", "--q", "2", "--n", "3", "--json", "-"}).out);
  ASSERT_EQ(f["factors"].size(), 3u);
  for (const auto& e : f["factors"]) EXPECT_EQ(e["coset"].size(), 1u);
  auto so = run({"factor", "--q", "2", "--n", "15", "--self-orthogonal"});
  EXPECT_NE(so.out.find("12^20310131"), std::string::npos);
  EXPECT_EQ(run({"factor", "--q", "2", "--n", "6"}).code, 4);
}

TEST(Cli, Table) {
  auto r6 = run({"table", "--id", "6", "--json", "-"});
  EXPECT_EQ(r6.code, 0);
  auto j = json::parse(r6.out);
  EXPECT_TRUE(j["reproduced_all_desk_scale"]);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["status"], "reproduced");

  auto r3 = run({"table", "--id", "3"});
  EXPECT_NE(r3.out.find("table3-n11"), std::string::npos);
  EXPECT_NE(r3.out.find("skipped (long-run)"), std::string::npos);
  EXPECT_NE(r3.out.find("malformed"), std::string::npos);
  EXPECT_EQ(run({"table", "--id", "9"}).code, 2);
}

TEST(Cli, ExtendFindsRows) {
  const auto base = temp_file("base.json", R"({"q":2,"n":15,"f":"12^3","g":"1220310131"})");
  const auto done = temp_file("done.json");
  auto r = run({"extend", base.string(), "--emit-spec", done.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[[31,17,"), std::string::npos);
  auto v = run({"verify", done.string()});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("[[31,17,"), std::string::npos);
  std::filesystem::remove(base);
  std::filesystem::remove(done);
}

TEST(Cli, SearchAndReport) {
  const auto cfg = temp_file("cfg.json", R"({"q":2,"n":7,"max_f_samples":8})");
  const auto out = temp_file("records.jsonl");
  auto r = run({"search", "--config", cfg.string(), "--output", out.string(), "--seed", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[15,4,8]_4 / [[15,7,3]]_2"), std::string::npos);
  auto rep = run({"search", "--report", out.string()});
  EXPECT_EQ(rep.code, 0);
  EXPECT_NE(rep.out.find("table1-n7"), std::string::npos);
  EXPECT_EQ(run({"search"}).code, 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
