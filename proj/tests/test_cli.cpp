#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = phidim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("phidim_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kGamma2 = "vertices: a b\narrow a a\narrow a b\narrow b b\n";
const char* kCycle4 = "vertices: 1 2 3 4\narrow 1 2\narrow 2 3\narrow 3 4\narrow 4 1\n";
const char* kLinear3 = "vertices: 1 2 3\narrow 1 2\narrow 2 3\n";

}  // namespace

TEST_F(CliTest, ComputeGammaTwoJson) {
  const auto r = run({"compute", "--quiver", write("g.q", kGamma2), "--k", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["phidim"], 1);
  EXPECT_EQ(j["gldim"], "infinite");
  EXPECT_EQ(j["bound_fk"], 2);
  EXPECT_EQ(j["selfinjective"], false);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["vertices"], 2);
  EXPECT_TRUE(j["rank_sequence"].is_array());
}

TEST_F(CliTest, ComputeSchemaOrder) {
  const auto r = run({"compute", "--quiver", write("g.q", kGamma2), "--k", "2", "--json"});
  const auto ordered = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [key, value] : ordered.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"phidim", "gldim", "selfinjective", "basis_size", "rank_sequence",
                                            "bound_fk", "k", "vertices"}));
}

TEST_F(CliTest, ComputeCycleAndLinear) {
  const auto c = run({"compute", "--quiver", write("c.q", kCycle4), "--k", "3", "--json"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(json::parse(c.out)["phidim"], 0);

  const auto l = run({"compute", "--quiver", write("l.q", kLinear3), "--k", "2", "--json"});
  ASSERT_EQ(l.code, 0) << l.err;
  const json j = json::parse(l.out);
  EXPECT_EQ(j["phidim"], 2);
  EXPECT_EQ(j["gldim"], 2);
}

TEST_F(CliTest, ComputeIsDeterministic) {
  const std::string path = write("g.q", kGamma2);
  EXPECT_EQ(run({"compute", "--quiver", path, "--k", "3", "--json"}).out,
            run({"compute", "--quiver", path, "--k", "3", "--json"}).out);
}

TEST_F(CliTest, ComputeTable) {
  const auto r = run({"compute", "--quiver", write("g.q", kGamma2), "--k", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phidim"), std::string::npos);
  EXPECT_NE(r.out.find("infinite"), std::string::npos);
}

TEST_F(CliTest, Classify) {
  const auto c = run({"classify", "--quiver", write("c.q", kCycle4), "--k", "3", "--json"});
  ASSERT_EQ(c.code, 0) << c.err;
  const json cj = json::parse(c.out);
  EXPECT_EQ(cj["selfinjective"]["value"], true);
  EXPECT_EQ(cj["phidim_one"]["value"], false);

  const auto g = run({"classify", "--quiver", write("g.q", kGamma2), "--k", "2", "--json"});
  const json gj = json::parse(g.out);
  EXPECT_EQ(gj["phidim_one"]["value"], true);
  EXPECT_EQ(gj["phidim_one"]["reason"], "det core != 0");

  const auto h = run({"classify", "--quiver", write("h.q", "vertices: 1 2\narrow 1 2\n"), "--k", "5", "--json"});
  const json hj = json::parse(h.out);
  EXPECT_EQ(hj["phidim_one"]["value"], true);
  EXPECT_EQ(hj["phidim_one"]["reason"], "J^k = 0");
}

TEST_F(CliTest, ConstructDefaults) {
  const auto two = run({"construct", "--n", "2", "--json"});
  ASSERT_EQ(two.code, 0) << two.err;
  const json j2 = json::parse(two.out);
  EXPECT_EQ(j2["adjacency"], json::parse("[[1,1],[1,1]]"));
  EXPECT_EQ(j2["achieved_phidim"], 2);

  const auto three = run({"construct", "--n", "3", "--json"});
  ASSERT_EQ(three.code, 0) << three.err;
  EXPECT_EQ(json::parse(three.out)["achieved_phidim"], 3);

  const auto text = run({"construct", "--n", "2"});
  EXPECT_EQ(text.out.rfind("vertices: 1 2\n", 0), 0u);
}

TEST_F(CliTest, ConstructRejectsZeroWeight) {
  const auto r = run({"construct", "--n", "2", "--w", "1,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, ConstructCustomVectors) {
  const auto r = run({"construct", "--n", "2", "--v", "1,1", "--w", "1/4,3/4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["achieved_phidim"], 2);
}

TEST_F(CliTest, Family) {
  const auto r = run({"family", "--name", "s5", "--params", "5,3,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["phidim"], 3);
  EXPECT_EQ(run({"family", "--name", "bogus", "--params", "1"}).code, 2);
  EXPECT_EQ(run({"family", "--name", "gamma", "--params", "2,x,2"}).code, 2);
}

TEST_F(CliTest, CheckIsDeterministicAndPasses) {
  const auto a = run({"check", "--seed", "3", "--samples", "60", "--workers", "1"});
  const auto b = run({"check", "--seed", "3", "--samples", "60", "--workers", "4"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos);
}

TEST_F(CliTest, CheckRadicalSquareZeroOnly) {
  const auto r = run({"check", "--samples", "80", "--max-k", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(CliTest, Errors) {
  EXPECT_EQ(run({"compute", "--quiver", (dir_ / "missing.q").string(), "--k", "2"}).code, 2);
  const auto bad = run({"compute", "--quiver", write("bad.q", "vertices: a\narrow a z\n"), "--k", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"compute", "--quiver", write("g.q", kGamma2), "--k", "1"}).code, 2);
  EXPECT_EQ(run({"compute", "--quiver", write("g.q", kGamma2), "--k", "80"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
