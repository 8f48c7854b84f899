#include <gtest/gtest.h>

#include "gstruct/cli.hpp"

using gstruct::cli::CommandOptions;
using gstruct::cli::json;
using gstruct::cli::run;
using gstruct::cli::Status;

namespace {

json ok_data(const std::string& command, const json& payload, const CommandOptions& opts = {}) {
  auto r = run(command, payload, opts);
  EXPECT_EQ(r.status, Status::Ok) << command << ": " << (r.diagnostics.empty() ? "" : r.diagnostics[0]);
  EXPECT_EQ(r.exit_code(), 0);
  return r.data;
}

}  // namespace

TEST(Cli, TypeOrderExample) {
  json d = ok_data("type-order", json::parse(R"({"command":"type-order","payload":{"name":"co","n":4,"q":1}})"));
  EXPECT_EQ(d["dims"], json::parse("[4,0]"));
  EXPECT_EQ(d["verdict"], "finite-type-2");
}

TEST(Cli, ProlongExample) {
  json d = ok_data("prolong", json::parse(R"({"name":"o","n":4,"q":1})"));
  EXPECT_EQ(d["dim"], 0);
}

TEST(Cli, DecomposeExampleAndPipeToRecompose) {
  auto r = run("decompose", json::parse(R"({"g":[["-4","0"],["0","1"]],"q":1})"));
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_DOUBLE_EQ(r.data["v"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(r.data["rep"][0][0].get<double>(), -2.0);
  EXPECT_DOUBLE_EQ(r.data["rep"][1][1].get<double>(), 0.5);

  json back = ok_data("recompose", r.to_json());
  EXPECT_EQ(back["g_exact"], json::parse(R"([["-4","0"],["0","1"]])"));
}

TEST(Cli, ExitCodes) {
  auto schema = run("decompose", json::parse(R"({"g":"nope"})"));
  EXPECT_EQ(schema.status, Status::Error);
  EXPECT_EQ(schema.exit_code(), 2);
  EXPECT_EQ(schema.to_json()["code"], "schema");
  EXPECT_FALSE(schema.diagnostics.empty());

  auto degenerate = run("decompose", json::parse(R"({"g":[["1","1"],["1","1"]]})"));
  EXPECT_EQ(degenerate.exit_code(), 3);
  EXPECT_EQ(degenerate.to_json()["code"], "precondition");

  auto volume = run("equiaffine", json::parse(R"({"gamma":[[0,0,0],[0,0,0]],"v":[{"coeff":"-1","exp":[0,0]}],"x":[0,0]})"));
  EXPECT_EQ(volume.exit_code(), 3);

  EXPECT_EQ(run("no-such-command", json::object()).exit_code(), 2);
  EXPECT_EQ(run("prolong", json::parse(R"({"command":"jet-mul","payload":{}})")).exit_code(), 2);
}

TEST(Cli, EveryCommandRegistered) {
  std::vector<std::string> expect{"prolong", "type-order", "co1-basis", "projective-basis", "jet-mul",
                                  "jet-inv", "member", "factor", "decompose", "recompose",
                                  "equivariant-value", "levi-civita", "transform-connection",
                                  "projective-diff", "projective-shift", "equiaffine", "weyl-build",
                                  "weyl-check", "weyl-intersect", "closure-check"};
  auto names = gstruct::cli::command_names();
  for (const auto& e : expect) EXPECT_NE(std::find(names.begin(), names.end(), e), names.end()) << e;
}

TEST(Cli, JetAndMembership) {
  json x = json::parse(R"({"a":[["1","0"],["0","1"]],"s":{"packing":"upper-jk","entries":[["1","0","0"],["0","0","0"]]}})");
  json y = json::parse(R"({"a":[["2","0"],["0","2"]],"s":[[0,0,0],[0,0,0]]})");
  json d = ok_data("jet-mul", {{"x", x}, {"y", y}});
  EXPECT_EQ(d["s"]["entries"][0][0], "2");

  json inv = ok_data("jet-inv", {{"x", y}});
  EXPECT_EQ(inv["a"][0][0], "1/2");

  json m = ok_data("member", json::parse(R"({"a":[["5/2","3/2"],["3/2","5/2"]],"tag":{"tag":"CO","n":2,"q":1}})"));
  EXPECT_EQ(m["member"], true);
  EXPECT_EQ(m["certificate"], "4");
}

TEST(Cli, ConnectionCommands) {
  json lc = ok_data("levi-civita", json::parse(R"({
    "g": [[[{"coeff":"1","exp":[0,0]},{"coeff":"1","exp":[2,0]}], 0], [0, 1]],
    "x": ["1","0"]})"));
  EXPECT_EQ(lc["gamma"]["entries"][0][0], "1/2");

  json eq = ok_data("equiaffine", json::parse(R"({"gamma":[[0,0,0],[0,0,0]],
    "v":[{"coeff":"1","exp":[0,0]},{"coeff":"1","exp":[1,0]}],"x":[0,0]})"));
  EXPECT_EQ(eq["mu"], json::parse(R"(["1/3","0"])"));

  json none = ok_data("projective-diff", json::parse(R"({"gamma1":[[0,0,0],[0,0,0]],"gamma2":[["1",0,0],[0,0,0]]})"));
  EXPECT_EQ(none["ok"], false);
}

TEST(Cli, ClosureCheckDeterministicForSeed) {
  CommandOptions opts;
  opts.seed = 42;
  json payload = json::parse(R"({"tag":{"tag":"CO","n":3,"q":1},"samples":5})");
  json a = ok_data("closure-check", payload, opts), b = ok_data("closure-check", payload, opts);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["ok"], true);
}
