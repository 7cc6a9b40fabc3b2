#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "modsym/catalog.hpp"
#include "modsym/drinfeld.hpp"

using namespace modsym;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "modsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const std::string kData = MODSYM_DATA_DIR;

}  // namespace

TEST(Cli, InfoFibonacci) {
  const Result r = run_cli({"info", "fibonacci"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "N = 5"));
  EXPECT_TRUE(contains(r.out, "ord(alpha) = 10"));
  EXPECT_TRUE(contains(r.out, "c = 14/5"));
  EXPECT_TRUE(contains(r.out, "3.618034"));
  EXPECT_TRUE(contains(r.out, "display only"));
}

TEST(Cli, InfoJsonIsStable) {
  const Result a = run_cli({"--format", "json", "info", "ising"});
  const Result b = run_cli({"info", "ising", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["fsexp"], 16);
  EXPECT_EQ(doc["central_charge"], "1/2");
  EXPECT_EQ(doc["anomaly"]["order"], 8);
}

TEST(Cli, ValidateFiles) {
  const Result good = run_cli({"validate", kData + "/fibonacci.json"});
  EXPECT_EQ(good.code, 0) << good.err;
  const Result bad = run_cli({"validate", kData + "/fibonacci_corrupt.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.err, "st_cubed"));
  EXPECT_TRUE(contains(bad.out, "st_cubed"));
}

TEST(Cli, LevelCertifyToric) {
  const Result r = run_cli({"level", "--certify", "toric"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "n = 2, group order = 6"));
  const Result j = run_cli({"--format", "json", "level", "--certify", "--fast", "toric"});
  EXPECT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["liftings"][0]["certificate"]["group_order"], 6);
  EXPECT_EQ(doc["liftings"][0]["certificate"]["mode"], "fingerprint");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({"info", "no_such_thing"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"info"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "yaml", "info", "fibonacci"}).code, 2);
  EXPECT_EQ(run_cli({"galois", "fibonacci", "--a", "6"}).code, 2);
  const auto path = std::filesystem::temp_directory_path() / "modsym_cli_malformed.json";
  std::ofstream(path) << "{\"name\": \"x\", \"ambient\": ";
  const Result r = run_cli({"validate", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "line 1"));
  std::filesystem::remove(path);
}

TEST(Cli, NotModularExitsOne) {
  const auto path = std::filesystem::temp_directory_path() / "modsym_cli_asym.json";
  std::ofstream(path) << R"({"name": "asym", "ambient": 1, "rank": 2, "s_tilde": [[[[1,1,0]], [[1,1,0]]], [[[2,1,0]], [[-1,1,0]]]], "theta": [0, 0]})";
  EXPECT_EQ(run_cli({"info", path.string()}).code, 1);
  EXPECT_EQ(run_cli({"validate", path.string()}).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, GaloisSingleResidue) {
  const Result r = run_cli({"--format", "json", "galois", "fibonacci", "--a", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["residues"].size(), 1u);
  EXPECT_EQ(doc["residues"][0]["sigma_hat"], "(0 1)");
  EXPECT_EQ(doc["level"], 60);
}

TEST(Cli, GaloisAllResidues) {
  const Result r = run_cli({"--format", "json", "galois", "--all", "fibonacci"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["residues"].size(), 16u);
  EXPECT_TRUE(doc["homomorphism"].get<bool>());
  EXPECT_FALSE(doc["ttilde"]["ttilde_symmetric"].get<bool>());
}

TEST(Cli, DoubleEmitsFileFormat) {
  const Result r = run_cli({"double", "fibonacci"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(from_json(r.out), drinfeld_double(builtin("fibonacci")).data);
  const Result v = run_cli({"double", "--verify-symmetry", "fibonacci"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(contains(v.out, "product_structure"));
}

TEST(Cli, AnomalyAndCatalog) {
  const Result a = run_cli({"anomaly", "ising"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "weakly_integral_only"));
  EXPECT_TRUE(contains(a.out, "[informational]"));
  const Result c = run_cli({"catalog", "list"});
  EXPECT_EQ(c.code, 0);
  for (const auto& name : builtin_names()) EXPECT_TRUE(contains(c.out, name));
}

TEST(Cli, FusionAndLiftings) {
  const Result f = run_cli({"fusion", "fibonacci"});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(contains(f.out, "1 x 1 = 0 + 1"));
  const Result l = run_cli({"--format", "json", "liftings", "semion"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(nlohmann::json::parse(l.out)["liftings"].size(), 12u);
}

TEST(Cli, ReportToric) {
  const Result r = run_cli({"--format", "json", "report", "toric"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_TRUE(doc.contains("double"));
  EXPECT_EQ(run_cli({"--format", "json", "report", "toric"}).out, r.out);
}
