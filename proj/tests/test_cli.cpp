#include "entangle/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace entangle;
using entangle::cli::main_entry;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  const auto r = run_cli(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, DseqAThree) {
  const auto j = run_json({"dseq", "--a", "3", "--b", "1", "--nmax", "10"});
  EXPECT_EQ(j["method"], "recurrence");
  for (const auto& e : j["values"]) {
    const long n = e["n"];
    if (n < 0) continue;
    const long v = (n + 1) * (n + 2) / 2;
    EXPECT_EQ(e["value"], std::to_string(n % 2 ? -v : v));
  }
}

TEST(Cli, DseqAllMethodsAgree) {
  const auto j = run_json({"dseq", "--a", "5/2", "--nmax", "12", "--method", "all"});
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 13u);
  EXPECT_EQ(run_cli({"dseq", "--a", "3", "--nmax", "4", "--method", "closed"}).code, 1);
}

TEST(Cli, MinorsVanishingInstance) {
  const auto j = run_json({"minors", "--family", "E", "--a", "2", "--n", "10"}, 2);
  EXPECT_FALSE(j["all_nonzero"].get<bool>());
  const auto& w = j["zero_witnesses"];
  EXPECT_NE(std::find(w.begin(), w.end(), Json::array({5})), w.end());
  EXPECT_EQ(j["minors"].size(), 11u);
}

TEST(Cli, MinorsWithMinSupport) {
  const auto j = run_json({"minors", "--family", "B", "--a", "3", "--n", "5", "--min-support"});
  EXPECT_TRUE(j["all_nonzero"].get<bool>());
  EXPECT_EQ(j["min_support"]["count"], 4);
  EXPECT_EQ(j["min_support"]["column"], 1);
  const auto rd = run_json({"minors", "--family", "E", "--a", "2", "--n", "10", "--min-support"}, 2);
  EXPECT_TRUE(rd["min_support"].contains("error"));
}

TEST(Cli, MinorBySpecJson) {
  const auto j = run_json({"minor", "--spec", R"({"family":"E","a":"3","b":"1","n":5,"delete_rows":[2]})"});
  EXPECT_EQ(j["determinant"], to_string(minor_E_product_formula(3, 5, 2)));
  EXPECT_EQ(j["product_formula"], j["determinant"]);
  EXPECT_EQ(j["rank"], 5);
  EXPECT_TRUE(j["kernel_vector"].is_null());
  EXPECT_EQ(j["matrix"]["rows"], 5);

  const auto k = run_json({"minor", "--family", "E", "--a", "2", "--n", "10", "--delete", "5"});
  EXPECT_EQ(k["determinant"], "0");
  EXPECT_EQ(k["rank"], 9);
  EXPECT_FALSE(k["kernel_vector"].is_null());
}

TEST(Cli, Certify) {
  const auto j = run_json({"certify", "--family", "B", "--a", "3", "--n", "8"});
  EXPECT_TRUE(j["verified_exhaustively"].get<bool>());
  EXPECT_EQ(j["minors_checked"], 165);
  const auto f = run_json({"certify", "--family", "B", "--a", "2", "--n", "6"}, 2);
  EXPECT_FALSE(f["theory_applies"].get<bool>());
  EXPECT_FALSE(f["counterexample"].is_null());
}

TEST(Cli, SubspaceBuildAndVerify) {
  const auto b = run_json({"subspace-build", "--construction", "alternating", "--a", "3", "--m", "5", "--n", "5"});
  EXPECT_EQ(b["dimension"], 4);
  EXPECT_EQ(b["pattern"], Json::array({"1", "-3", "3", "-1"}));
  EXPECT_EQ(b["claimed_min_rank"], 4);

  const auto chain = run_json({"subspace-build", "--construction", "chain", "--a", "5", "--m", "5", "--n", "5"});
  EXPECT_EQ(chain["S"]["dimension"], 16);
  EXPECT_EQ(chain["T"]["dimension"], 9);
  EXPECT_EQ(chain["U"]["dimension"], 4);
  EXPECT_TRUE(chain["containment"]["T_in_S"].get<bool>());
  EXPECT_TRUE(chain["containment"]["U_in_T"].get<bool>());

  const auto v = run_json(
      {"subspace-verify", "--construction", "nested", "--which", "outer", "--a", "5", "--m", "5", "--n", "5"});
  EXPECT_TRUE(v["verdict"]["passed"].get<bool>());
  EXPECT_EQ(v["verdict"]["certified_bound"], 3);

  const auto neg =
      run_json({"subspace-verify", "--construction", "pattern", "--pattern", "1,-2,2,-1", "--m", "13", "--n", "13"}, 2);
  EXPECT_FALSE(neg["verdict"]["counterexample"].is_null());

  EXPECT_EQ(run_cli({"subspace-verify", "--construction", "nested", "--a", "5", "--m", "5", "--n", "5"}).code, 1);
}

TEST(Cli, Witness) {
  const auto j = run_json({"witness", "--a", "5", "--m", "5", "--n", "5"});
  EXPECT_EQ(j["schmidt_rank"], 3);
  EXPECT_TRUE(j["in_outer"].get<bool>());
  EXPECT_FALSE(j["in_inner"].get<bool>());
}

TEST(Cli, Reproduce) {
  const auto r = run_cli({"reproduce", "--all"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_NE(r.err.find("0 failed"), std::string::npos);

  const auto bad = run_cli({"reproduce", "--inject-a", "2"});
  EXPECT_EQ(bad.code, 2);
  const auto jb = Json::parse(bad.out);
  EXPECT_GT(jb["failed"].get<int>(), 0);
  for (const auto& row : jb["rows"])
    if (!row["pass"].get<bool>()) {
      EXPECT_NE(row["expected"], row["computed"]);
    }
}

TEST(Cli, ReproduceLargerGridSameVerdicts) {
  const auto a = run_json({"reproduce", "--nmax", "10"});
  const auto b = run_json({"reproduce", "--nmax", "12"});
  ASSERT_EQ(a["rows"].size(), b["rows"].size());
  for (std::size_t i = 0; i < a["rows"].size(); ++i) EXPECT_EQ(a["rows"][i]["pass"], b["rows"][i]["pass"]);
}

TEST(Cli, ByteIdenticalReports) {
  const std::vector<std::vector<std::string>> configs{
      {"minors", "--family", "B", "--a", "3", "--n", "6"},
      {"subspace-verify", "--construction", "positive", "--a", "6", "--m", "5", "--n", "5", "--mode", "random",
       "--samples", "50", "--seed", "7"},
      {"reproduce"},
  };
  for (const auto& c : configs) {
    auto one = c, many = c;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "4"});
    EXPECT_EQ(run_cli(one).out, run_cli(many).out) << c.front();
    EXPECT_EQ(run_cli(c).out, run_cli(c).out);
  }
}

TEST(Cli, UsageErrorsRejectedBeforeWork) {
  EXPECT_EQ(run_cli({"dseq", "--a", "1/0", "--nmax", "3"}).code, 1);
  EXPECT_EQ(run_cli({"minors", "--family", "Q", "--a", "3", "--n", "3"}).code, 1);
  EXPECT_EQ(run_cli({"minors", "--family", "E", "--a", "3", "--n", "0"}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"dseq", "--a", "3", "--nmax", "3", "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({"subspace-verify", "--construction", "alternating", "--a", "3", "--m", "5", "--n", "5", "--grid",
                     "1,x"})
                .code,
            1);
  const auto over = run_cli({"subspace-verify", "--construction", "chain", "--which", "S", "--a", "5", "--m", "5",
                             "--n", "5", "--mode", "grid", "--budget", "10"});
  EXPECT_EQ(over.code, 1);
  EXPECT_NE(over.err.find("budget"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, CsvAndOutFile) {
  const auto csv = run_cli({"minors", "--family", "G", "--a", "2", "--n", "2", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, 14), "deleted,value\n");
  EXPECT_NE(csv.out.find("\n1 2,"), std::string::npos);

  const auto dseq = run_cli({"--format", "csv", "dseq", "--a", "3", "--nmax", "2"});
  EXPECT_EQ(dseq.out, "n,value\n-1,0\n0,1\n1,-3\n2,6\n");

  const auto flat = run_cli({"certify", "--family", "E", "--a", "6", "--n", "3", "--format", "csv"});
  EXPECT_NE(flat.out.find("verified_exhaustively,true"), std::string::npos);

  const auto path = (std::filesystem::temp_directory_path() / "entangle_cli_test.json").string();
  const auto r = run_cli({"dseq", "--a", "3", "--nmax", "2", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = Json::parse(in);
  EXPECT_EQ(j["values"].size(), 4u);
  std::remove(path.c_str());

  EXPECT_EQ(run_cli({"dseq", "--a", "3", "--nmax", "2", "--out", "/nonexistent-dir/x.json"}).code, 1);
}

// Every command in the table runs, and together they reach each library entry
// point: builders, det/rank/kernel, minor enumeration, min_support,
// certification, subspace builders, verification modes, witness, reproduce.
TEST(Cli, CommandTableCoverage) {
  const std::map<std::string, std::vector<std::vector<std::string>>> invocations{
      {"dseq", {{"dseq", "--a", "6", "--nmax", "5", "--method", "all"}, {"dseq", "--a", "6", "--nmax", "5", "--method", "series"}}},
      {"minor", {{"minor", "--family", "G", "--a", "2", "--n", "3", "--delete", "1", "5"},
                 {"minor", "--family", "E", "--a", "5", "--b", "0", "--n", "3", "--delete", "2"}}},
      {"minors", {{"minors", "--family", "Btilde", "--a", "6", "--n", "4", "--min-support"}}},
      {"certify", {{"certify", "--family", "Etilde", "--a", "-6", "--n", "5"},
                   {"certify", "--family", "G", "--a", "-2", "--n", "5"}}},
      {"subspace-build", {{"subspace-build", "--construction", "nested", "--a", "5", "--m", "5", "--n", "5"},
                          {"subspace-build", "--construction", "positive", "--a", "-6", "--m", "6", "--n", "4"}}},
      {"subspace-verify", {{"subspace-verify", "--construction", "alternating", "--a", "3", "--m", "5", "--n", "5",
                            "--mode", "grid"},
                           {"subspace-verify", "--construction", "chain", "--which", "U", "--a", "5", "--m", "5",
                            "--n", "5", "--mode", "random", "--samples", "20"}}},
      {"witness", {{"witness", "--a", "5", "--m", "6", "--n", "5"}}},
      {"reproduce", {{"reproduce", "--all"}}},
  };
  std::set<std::string> seen;
  for (auto c : cli::kCommands) {
    const auto it = invocations.find(std::string(c));
    ASSERT_NE(it, invocations.end()) << c;
    for (const auto& args : it->second) {
      const auto r = run_cli(args);
      EXPECT_EQ(r.code, 0) << c << ": " << r.err;
      EXPECT_NO_THROW(Json::parse(r.out)) << c;
    }
    seen.insert(std::string(c));
  }
  EXPECT_EQ(seen.size(), invocations.size());
}
