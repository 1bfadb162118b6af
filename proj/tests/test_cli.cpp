#include "cli.hpp"

#include "rca/calculus.hpp"
#include "rca/fuzz.hpp"
#include "rca/syntax.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = rca::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(RCA_DATA_DIR) + "/" + rel; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("rca-cli-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(CliConcepts, Counts) {
  CliRun r = invoke({"concepts", data("contexts/diagonal.ctx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "4 concepts")) << r.out;
  r = invoke({"concepts", data("contexts/full1.ctx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "1 concept\n")) << r.out;
}

TEST(CliConcepts, TwentyByTwenty) {
  fs::path dir = scratch("big");
  rca::Rng rng(20);
  std::ofstream(dir / "big.ctx") << rca::printContext(rca::randomContext(rng, 20, 20, 0.3));
  CliRun r = invoke({"--json", "concepts", (dir / "big.ctx").string(), "--dot", (dir / "big.dot").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "rca.record/1");
  EXPECT_LE(j["concepts"].get<std::size_t>(), 4096u);
  EXPECT_TRUE(fs::exists(dir / "big.dot"));
  r = invoke({"concepts", (dir / "big.ctx").string(), "--max-concepts", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "capacity")) << r.err;
}

TEST(CliConcepts, ParseErrorHasSpan) {
  fs::path dir = scratch("bad");
  std::ofstream(dir / "bad.ctx") << "context 2 2\nX.\nX\n";
  CliRun r = invoke({"concepts", (dir / "bad.ctx").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "bad.ctx:3:")) << r.err;
}

TEST(CliRough, IdentityPartition) {
  CliRun r = invoke({"rough", data("contexts/diagonal-identity.ctx"), "--derive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "R = S = I"));
}

TEST(CliRough, AmenableLemmasPass) {
  CliRun r = invoke({"rough", data("contexts/amenable.ctx"), "--verify-lemmas"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "ok    composition"));
}

TEST(CliRough, NonAmenableRefused) {
  CliRun r = invoke({"rough", data("contexts/non-amenable.ctx"), "--verify-lemmas"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "refused: the context is not amenable")) << r.out;
  r = invoke({"rough", data("contexts/diagonal.ctx")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "partition"));
}

TEST(CliAlgebra, FromContext) {
  CliRun r = invoke({"algebra", "--from-context", data("contexts/diagonal-identity.ctx"), "--check=aka"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "class aka: member"));
}

TEST(CliAlgebra, FactorThenRoundTrip) {
  fs::path dir = scratch("factor");
  std::string out = (dir / "h.alg").string();
  CliRun r = invoke({"algebra", data("algebras/pentagon.alg"), "--factor", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  r = invoke({"algebra", out, "--roundtrip", "--check"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "isomorphic"));
  r = invoke({"algebra", data("algebras/pentagon.alg"), "--roundtrip"});
  EXPECT_EQ(r.code, 0);
}

TEST(CliAlgebra, CorruptedFails) {
  CliRun r = invoke({"--json", "algebra", data("algebras/pentagon-corrupt.alg"), "--check=aka"});
  EXPECT_EQ(r.code, 1);
  std::istringstream lines(r.out);
  std::string line;
  bool pairWitness = false;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    if (!j["ok"].get<bool>() && j.contains("witness") && j["witness"].size() == 2) pairWitness = true;
  }
  EXPECT_TRUE(pairWitness) << r.out;
}

TEST(CliAlgebra, KIA3lMutant) {
  EXPECT_EQ(invoke({"algebra", data("algebras/diagonal.alg"), "--check=kia3l"}).code, 0);
  EXPECT_EQ(invoke({"algebra", data("algebras/diagonal-lax-broken.alg"), "--check=kia3l"}).code, 1);
  EXPECT_EQ(invoke({"algebra", data("algebras/diagonal.alg"), "--check=bogus"}).code, 2);
}

TEST(CliProof, KIA3lDerivation) {
  CliRun r = invoke({"proof", data("proofs/kia3l-main.proof"), "--calc=kia3l", "--check"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = invoke({"proof", data("proofs/kia3l-main.proof"), "--calc=aka", "--check"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "(kia3l)")) << r.out;
  EXPECT_TRUE(contains(r.out, "not-in-calculus")) << r.out;
}

TEST(CliProof, CutElimExamples) {
  fs::path dir = scratch("cutelim");
  for (const char* name : {"cut-black-square-I", "cut-white-I"}) {
    std::string out = (dir / (std::string(name) + ".proof")).string();
    CliRun r = invoke({"--json", "proof", data(std::string("proofs/") + name + ".proof"), "--cutelim", "--out", out});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["complete"].get<bool>());
    EXPECT_LE(j["steps"].size(), 3u);
    CliRun again = invoke({"proof", out, "--check"});
    EXPECT_EQ(again.code, 0) << again.out;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(rca::cutCount(rca::parseProof(ss.str()).tree), 0u);
  }
}

TEST(CliProof, Soundness) {
  fs::path dir = scratch("sound");
  CliRun r = invoke({"proof", data("proofs/kia3l-cut.proof"), "--soundness", "10", "--seed", "4", "--counterexamples",
               dir.string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "10/10"));
}

TEST(CliProof, EmitLibrary) {
  fs::path dir = scratch("emit");
  CliRun r = invoke({"proof", "--emit-library", dir.string()});
  EXPECT_EQ(r.code, 0);
  std::size_t n = std::distance(fs::directory_iterator(dir), fs::directory_iterator{});
  EXPECT_EQ(n, rca::axiomLibrary().size());
  for (const auto& p : rca::axiomLibrary()) EXPECT_EQ(invoke({"proof", (dir / (p.name + ".proof")).string()}).code, 0);
}

TEST(CliFuzz, RoughCampaignClean) {
  CliRun r = invoke({"fuzz", "--suite=rough", "--count=200", "--seed=7", "--no-files"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "rough: 200 items, 0 violations"));
}

TEST(CliFuzz, Deterministic) {
  CliRun a = invoke({"--json", "fuzz", "--suite=all", "--count=40", "--seed=11", "--jobs=4", "--no-files"});
  CliRun b = invoke({"--json", "fuzz", "--suite=all", "--count=40", "--seed=11", "--jobs=1", "--no-files"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  CliRun c = invoke({"--json", "fuzz", "--suite=all", "--count=40", "--seed=12", "--jobs=4", "--no-files"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliFuzz, CalculusSuiteSound) {
  CliRun r = invoke({"fuzz", "--suite=calculus", "--count=30", "--seed=3", "--no-files"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "calculus: 30 items, 0 violations"));
}

TEST(CliUsage, BadArguments) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"fuzz", "--suite=nope"}).code, 2);
  EXPECT_EQ(invoke({"concepts", "/nonexistent/file.ctx"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliUsage, JobsFromEnvironment) {
  setenv("RCA_JOBS", "3", 1);
  EXPECT_EQ(rca::cli::defaultJobs(), 3u);
  setenv("RCA_JOBS", "zero", 1);
  EXPECT_GE(rca::cli::defaultJobs(), 1u);
  unsetenv("RCA_JOBS");
}
