#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "softcvx/cli.hpp"
#include "softcvx/document.hpp"

using namespace softcvx;

namespace {

const std::string kData = SOFTCVX_TEST_DATA;
const std::string kFixture = kData + "/nonconvex_family.json";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SOFTCVX_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ValidateNonconvexFamily) {
  const auto r = run({"validate", kFixture, "--family", "zeta"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness 2: Omega2, Omega4 -> {(e1,∅),(e2,{x2})}"), std::string::npos) << r.out;
  EXPECT_EQ(run({"validate", kFixture, "--family", "zetastar"}).code, 0);
  EXPECT_EQ(run({"validate", kFixture, "--family", "zetastar", "--mode", "literal"}).code, 0);
  EXPECT_EQ(run({"validate", kFixture, "--family", "zeta", "--mode", "literal", "--cap", "3"}).code, 1);
}

// Witnesses printed on failure re-verify through the library.
TEST(Cli, WitnessesReverify) {
  const auto r = run({"validate", kFixture, "--family", "zeta", "--out", "json"});
  ASSERT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  const BoundDocument doc(load_document(kFixture));
  const SoftFamily zeta = doc.family("zeta");
  ASSERT_FALSE(j["witnesses"].empty());
  for (const auto& w : j["witnesses"]) {
    ASSERT_EQ(w["axiom"], "2");
    SoftSet meet = SoftSet::absolute(doc.space());
    for (const auto& m : w["members"]) meet = intersect(meet, doc.set(m.get<std::string>()));
    EXPECT_FALSE(zeta.contains(meet));
    EXPECT_EQ(w["computed"].get<std::string>(), to_string(meet));
  }
}

TEST(Cli, HullAndSlice) {
  auto r = run({"hull", kFixture, "--family", "zetastar", "--target", "PHI"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PHI"), std::string::npos);
  r = run({"hull", kFixture, "--family", "zetastar", "--target", "Target"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Omega3"), std::string::npos);
  EXPECT_EQ(run({"pointwise-hull", kFixture, "--family", "zetastar", "--target", "Target"}).code, 0);
  EXPECT_EQ(run({"hull", kFixture, "--family", "zeta", "--target", "PHI"}).code, 1);

  r = run({"slice", kFixture, "--family", "zeta", "--param", "e1"});
  EXPECT_EQ(r.code, 0);
  for (const char* s : {"∅", "{x1}", "{x2}", "{x1,x2}", "{x1,x2,x3}"})
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  EXPECT_EQ(run({"slice", kFixture, "--family", "zeta", "--param", "e9"}).code, 2);
}

TEST(Cli, BasesOperatorsGenerate) {
  EXPECT_EQ(run({"validate-base", kFixture, "--family", "beta"}).code, 0);
  EXPECT_EQ(run({"validate-base", kFixture, "--family", "pair"}).code, 1);
  const auto g = run({"generate", kFixture, "--from", "base", "--family", "chain"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("Omega5"), std::string::npos);
  EXPECT_EQ(run({"generate", kFixture, "--from", "base", "--family", "pair"}).code, 1);

  const std::string sdp = kData + "/counterexample_sdp.json";
  EXPECT_EQ(run({"validate-operator", sdp, "--operator", "domain", "--kind", "derived"}).code, 0);
  EXPECT_EQ(run({"validate-operator", sdp, "--operator", "nope"}).code, 2);
  EXPECT_EQ(run({"tabulate-hull", kFixture, "--family", "zetastar"}).code, 0);
}

TEST(Cli, CheckFunctions) {
  EXPECT_EQ(run({"check-fn", kFixture, "--property", "scp", "--function", "id", "--family", "zetastar"}).code, 0);
  EXPECT_EQ(run({"check-fn", kFixture, "--property", "scc", "--function", "id", "--family", "zetastar"}).code, 0);
  // a check on a non-structure is a precondition failure
  EXPECT_EQ(run({"check-fn", kFixture, "--property", "scp", "--function", "id", "--family", "zeta"}).code, 2);

  for (const char* p : {"scp", "scc", "sbp"}) {
    const std::string file = kData + "/counterexample_" + p + ".json";
    EXPECT_EQ(run({"check-fn", file, "--property", p, "--function", "f", "--family", "domain",
                   "--codomain-family", "codomain"})
                  .code,
              1)
        << p;
  }
  EXPECT_EQ(run({"check-fn", kData + "/counterexample_sdp.json", "--property", "sdp", "--function", "f",
                 "--operator", "domain", "--codomain-operator", "codomain"})
                .code,
            1);
}

TEST(Cli, InduceEnumerateSuite) {
  auto r = run({"induce", "--crisp", kData + "/crisp/chain.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{(e1,{x1}),(e2,{x1,x2})}"), std::string::npos);
  EXPECT_EQ(run({"induce", "--crisp", kData + "/crisp/chain.json", "--single-set", "--out", "json"}).code, 0);
  EXPECT_EQ(run({"induce", "--crisp", kData + "/crisp/not_closed.json", "--params", "e1"}).code, 1);
  EXPECT_EQ(run({"induce", "--crisp", kData + "/crisp/missing.json"}).code, 2);

  r = run({"enumerate", "--max-elems", "2", "--max-params", "1", "--out", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"structures\": 4"), std::string::npos) << r.out;
  EXPECT_EQ(run({"enumerate", "--max-elems", "5", "--max-params", "3"}).code, 2);

  r = run({"verify-suite", kFixture, "--max-elems", "2", "--max-params", "1", "--inject", "zeta"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("injected zeta: invalid"), std::string::npos);

  r = run({"counterexample", "--property", "scp", "--max-elems", "2", "--max-params", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(serialize(parse_document(r.out)), r.out);
}

TEST(Cli, UsageAndFormatErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"validate", kFixture}).code, 2);
  EXPECT_EQ(run({"validate", kFixture, "--family", "zeta", "--mode", "slow"}).code, 2);
  EXPECT_EQ(run({"validate", kFixture, "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"validate", kData + "/does_not_exist.json", "--family", "zeta"}).code, 2);
  for (const char* bad : {"truncated.json", "unknown_name.json", "partial_assignment.json"}) {
    const auto r = run({"validate", kData + "/malformed/" + bad, "--family", "F"});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(run_binary("validate " + kFixture + " --family zetastar"), 0);
  EXPECT_EQ(run_binary("validate " + kFixture + " --family zeta"), 1);
  EXPECT_EQ(run_binary("validate " + kData + "/malformed/truncated.json --family F"), 2);
  EXPECT_EQ(run_binary("bogus"), 2);
}
