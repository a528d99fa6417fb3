#include "rforge/cli/cli.hpp"
#include "rforge/cli/export.hpp"
#include "rforge/errors.hpp"
#include "rforge/minors.hpp"
#include "rforge/verify.hpp"

#include "singular_lint.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rforge;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "rforge_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, GensMacaulay2MatchesGolden) {
  auto r = run({"gens", "--d", "2", "--n", "3", "--format", "m2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("R = QQ[a_1..a_3,b_1..b_3,c_1..c_3];\n", 0), 0u);
  EXPECT_EQ(r.out, slurp(std::filesystem::path(RFORGE_GOLDEN_DIR) / "gens_d2_n3.m2"));
}

TEST(Cli, GensMacaulay2IndexedNames) {
  auto r = run({"gens", "--d", "1", "--n", "2", "--format", "m2", "--alias", "false"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "R = QQ[a_(1,0),a_(1,1),a_(2,0),a_(2,1)];\nI = ideal(\n  -a_(1,1)*a_(2,0)+a_(1,0)*a_(2,1)\n  );\n");
}

TEST(Cli, SingularPassesLinter) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 2}}) {
    auto r = run({"gens", "--d", std::to_string(d), "--n", std::to_string(n), "--format", "singular"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lint::SingularLinter(r.out).check(), "") << r.out;
  }
  auto basis = run({"export", "--d", "2", "--n", "3", "--what", "eliminated", "--format", "singular"});
  ASSERT_EQ(basis.code, 0);
  EXPECT_EQ(lint::SingularLinter(basis.out).check(), "");
}

TEST(Cli, LinterRejectsBrokenScripts) {
  EXPECT_NE(lint::SingularLinter("ring R = 0,(a),dp;\nideal I = a*b;\n").check(), "");
  EXPECT_NE(lint::SingularLinter("ring R = 0,(a),dp;\nideal I = a+;\n").check(), "");
  EXPECT_NE(lint::SingularLinter("ring R = 0,(a),dp\nideal I = a;\n").check(), "");
  EXPECT_EQ(lint::SingularLinter("ring R = 0,(a,b),dp;\nideal I = -3/2*a^2+b,\n  1;\n").check(), "");
}

TEST(Cli, JsonExportRoundTrip) {
  auto r = run({"gens", "--d", "2", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto imported = cli::import_ideal(json::parse(r.out));
  EXPECT_EQ(imported.generators, polys_of(enumerate_generators(2, 3)));
  EXPECT_EQ(json::parse(r.out)["records"].size(), 16u);

  auto path = scratch("ideal.json");
  std::ofstream(path) << r.out;
  auto again = run({"export", "--input", path.string(), "--format", "json"});
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(cli::import_ideal(json::parse(again.out)).generators, imported.generators);
}

TEST(Cli, ExportBasisCarriesBasis) {
  auto r = run({"export", "--d", "2", "--n", "2", "--what", "basis", "--order", "diag", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["basis"].size(), 1u);
  EXPECT_EQ(doc["generators"], doc["basis"]);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gens", "--d", "2", "--n", "3", "--format", "singular"},
           {"leadterms", "--d", "2", "--n", "3", "--order", "degrevlex", "--initial"},
           {"sample", "--d", "2", "--n", "3", "--seed", "5", "--planted"}})
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifyGroebnerSylvester) {
  auto r = run({"verify", "groebner", "--d", "2", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["witnesses"]["generators"], 1);
  EXPECT_EQ(doc["witnesses"]["pairs_checked"], 0);
  for (const char* key : {"claim", "parameters", "status", "witnesses"}) EXPECT_TRUE(doc.contains(key));
}

TEST(Cli, VerifyEveryCheck) {
  for (const char* check : {"groebner", "elimination", "chart", "diagonal", "planted", "roots", "rank", "components",
                            "example"}) {
    auto r = run({"verify", check, "--d", "2", "--n", "3", "--samples", "20"});
    EXPECT_EQ(r.code, 0) << check << r.out << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["status"], "pass") << check;
    EXPECT_FALSE(doc["claim"].get<std::string>().empty());
  }
  EXPECT_EQ(run({"verify", "sylvester", "--d", "3", "--n", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "sylvester", "--d", "3", "--n", "3"}).code, 2);
}

TEST(Cli, ResourceExhaustionExitCode) {
  auto r = run({"verify", "elimination", "--d", "2", "--n", "3", "--max-pairs", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out)["status"], "exhausted");
  ::setenv("RESULTANT_FORGE_LIMITS", "max_pairs=2", 1);
  EXPECT_EQ(run({"verify", "chart", "--d", "2", "--n", "3"}).code, 3);
  ::unsetenv("RESULTANT_FORGE_LIMITS");
}

TEST(Cli, Degree) {
  auto r = run({"degree", "--degrees", "2,3,5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["D"], 10);
  EXPECT_EQ(run({"degree", "--degrees", "4"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gens", "--d", "2", "--n", "3", "--format", "pdf"}).code, 2);
  EXPECT_EQ(run({"cascade", "--d", "2", "--n", "3", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"gens", "--d", "2", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--coeffs", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Cascade) {
  auto r = run({"cascade", "--d", "1", "--n", "2", "--k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a_1_0 a_1_1\na_2_0 a_2_1\n");
  auto j = json::parse(run({"cascade", "--d", "2", "--n", "3", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(j["rows"][3][0], "0");
  EXPECT_EQ(j["rows"][3][1], "a_1_0");
}

TEST(Cli, Walks) {
  auto j = json::parse(run({"walks", "--d", "2", "--n", "2", "--reduced"}).out);
  EXPECT_EQ(j, json::parse("[[[1,0],[2,1],[1,1],[2,2]]]"));
  auto m = run({"walks", "--d", "1", "--n", "2", "--k", "1", "--monomials", "--format", "text"});
  EXPECT_EQ(m.out, "a_1_0*a_2_1\n");
}

TEST(Cli, Leadterms) {
  auto r = run({"leadterms", "--d", "2", "--n", "3", "--k", "1", "--order", "degrevlex"});
  EXPECT_EQ(r.out, "a_3*b_2*c_1\n");
  auto diag = run({"leadterms", "--d", "2", "--n", "3", "--k", "1", "--alias", "false"});
  EXPECT_EQ(diag.out, "a_1_0*a_2_1*a_3_2\n");
}

TEST(Cli, Components) {
  auto j = json::parse(run({"components", "--d", "2", "--n", "3"}).out);
  EXPECT_EQ(j["components"].size(), 6u);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["degree"], 6);
}

TEST(Cli, SampleThenEval) {
  auto s = run({"sample", "--d", "2", "--n", "3", "--seed", "4", "--planted"});
  ASSERT_EQ(s.code, 0);
  auto path = scratch("tuple.json");
  std::ofstream(path) << s.out;
  auto e = run({"eval", "--coeffs", path.string()});
  ASSERT_EQ(e.code, 0) << e.err;
  auto doc = json::parse(e.out);
  EXPECT_TRUE(doc["all_generators_vanish"]);
  EXPECT_TRUE(doc["root"]["has_affine_common_root"]);
  EXPECT_EQ(doc["generators"].size(), 16u);
  EXPECT_EQ(run({"eval", "--d", "3", "--coeffs", path.string()}).code, 2);
}

TEST(Cli, OutputFile) {
  auto path = scratch("out.m2");
  auto r = run({"--output", path.string(), "gens", "--d", "2", "--n", "3", "--format", "m2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), slurp(std::filesystem::path(RFORGE_GOLDEN_DIR) / "gens_d2_n3.m2"));
}

TEST(Export, UnsupportedFormat) { EXPECT_THROW(cli::parse_export_format("pdf"), ParameterOutOfRange); }
