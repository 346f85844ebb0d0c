#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "revtri/cli.hpp"
#include "support.hpp"

using namespace revtri;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(REVTRI_SAMPLES) + "/" + name; }

Json read_json(const fs::path& p) {
  std::ifstream f(p);
  return Json::parse(f);
}

// Same structure and strings; numbers equal to 1e-12 relative.
void expect_json_near(const Json& got, const Json& want, const std::string& path = "$") {
  if (want.is_number() && got.is_number()) {
    EXPECT_LE(rel_err(got.get<double>(), want.get<double>()), 1e-12) << path;
    return;
  }
  ASSERT_EQ(got.type(), want.type()) << path;
  if (want.is_object()) {
    ASSERT_EQ(got.size(), want.size()) << path;
    for (const auto& [k, v] : want.items()) {
      ASSERT_TRUE(got.contains(k)) << path << "." << k;
      expect_json_near(got[k], v, path + "." + k);
    }
  } else if (want.is_array()) {
    ASSERT_EQ(got.size(), want.size()) << path;
    for (std::size_t i = 0; i < want.size(); ++i)
      expect_json_near(got[i], want[i], path + "[" + std::to_string(i) + "]");
  } else {
    EXPECT_EQ(got, want) << path;
  }
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("revtri_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

struct GoldenCase {
  std::vector<std::string> args;
  std::string golden;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesCommittedOutput) {
  const auto& c = GetParam();
  const Invocation r = run(c.args);
  ASSERT_EQ(r.code, 0) << r.err;
  expect_json_near(Json::parse(r.out), read_json(std::string(REVTRI_GOLDEN) + "/" + c.golden));
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(
        GoldenCase{{"check", "--input", sample("cone_pair.json"), "--method", "t21"},
                   "cone_pair.check.t21.json"},
        GoldenCase{{"bound", "--input", sample("cone_pair.json"), "--method", "t21", "--auto-params"},
                   "cone_pair.bound.t21.json"},
        GoldenCase{{"bound", "--input", sample("sector_pair.json"), "--method", "p41"},
                   "sector_pair.bound.p41.json"},
        GoldenCase{{"bound", "--input", sample("sector_pair.json"), "--method", "petrovich"},
                   "sector_pair.bound.petrovich.json"},
        GoldenCase{{"compare", "--input", sample("sector_pair.json")}, "sector_pair.compare.json"},
        GoldenCase{{"bound", "--input", sample("band_example.json"), "--method", "c23"},
                   "band_example.bound.c23.json"},
        GoldenCase{{"compare", "--input", sample("cancelling.json")}, "cancelling.compare.json"}));

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "--input", sample("cancelling.json"), "--method", "t21"}).code, 2);
  EXPECT_EQ(run({"check", "--input", sample("bad_shape.json"), "--method", "t21"}).code, 3);
  EXPECT_EQ(run({"bound", "--input", sample("t21_cone.json"), "--method", "p41"}).code, 3);
  EXPECT_EQ(run({"bound", "--input", sample("cone_pair.json"), "--method", "c23"}).code, 3);
  EXPECT_EQ(run({"check", "--input", sample("t31_axes.json"), "--method", "t21"}).code, 3);
  EXPECT_EQ(run({"check"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"search", "--input", sample("zero_family.json")}).code, 2);
  EXPECT_EQ(run({"search", "--input", sample("cone_pair.json"), "--restarts", "0"}).code, 3);
}

TEST(Cli, MissingReferenceNamesTheField) {
  const Invocation r = run({"check", "--input", sample("t31_axes.json"), "--method", "t21"});
  EXPECT_NE(r.err.find("reference"), std::string::npos);
}

TEST(Cli, CompareWritesTableToStderr) {
  const Invocation r = run({"compare", "--input", sample("sector_pair.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("petrovich"), std::string::npos);
  EXPECT_EQ(Json::parse(r.out).front()["method"], "petrovich");
}

TEST(Cli, SynthRoundTripEveryMethod) {
  const fs::path dir = scratch("synth");
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"dm", R"({"r":0.5})"},
      {"t21", R"({"r1":0.4,"r2":0.3})"},
      {"c22", R"({"rho1":0.8,"rho2":0.9})"},
      {"c23", R"({"m1":0.1,"M1":10,"m2":0.1,"M2":10})"},
      {"t31", R"({"r":[0.3,0.4]})"},
      {"t32", R"({"r":[0.3,0.2],"rho":[0.2,0.1]})"},
      {"c32", R"({"rho":[0.9,0.9],"eta":[0.95,0.95]})"},
      {"c33", R"({"bands":[{"m1":0.1,"M1":10,"m2":0.1,"M2":10}]})"},
      {"p41", R"({"phi1":0.2,"phi2":0.9})"},
      {"p42", R"({"rho1":0.8,"rho2":0.9})"},
      {"petrovich", R"({"a":1.0,"theta":0.5})"},
  };
  for (const auto& [m, params] : cases) {
    const std::string dim = (m == "p41" || m == "p42" || m == "petrovich") ? "1" : "3";
    for (int seed = 0; seed < 10; ++seed) {
      const std::string file = (dir / (m + std::to_string(seed) + ".json")).string();
      const Invocation s = run({"synth", "--method", m, "--params", params, "--dim", dim, "--count", "4",
                         "--seed", std::to_string(seed), "--output", file});
      ASSERT_EQ(s.code, 0) << m << ": " << s.err;
      EXPECT_TRUE(Json::parse(s.out)["feasible"].get<bool>());
      const Invocation c = run({"check", "--input", file, "--method", m});
      EXPECT_EQ(c.code, 0) << m << " seed " << seed << ": " << c.out;
    }
  }
}

TEST(Cli, SynthIsByteDeterministic) {
  const fs::path dir = scratch("determinism");
  const auto synth = [&](const std::string& name) {
    const std::string file = (dir / name).string();
    run({"synth", "--method", "c22", "--params", R"({"rho1":0.8,"rho2":0.85})", "--dim", "3",
         "--seed", "12", "--output", file});
    std::ifstream f(file, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string a = synth("a.json");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, synth("b.json"));
}

TEST(Cli, SynthEqualityGivesTightnessOne) {
  const fs::path dir = scratch("equality");
  const std::string file = (dir / "eq.json").string();
  const double h = 1 / std::sqrt(2.0);
  const std::string params = Json{{"r1", h}, {"r2", h}}.dump();
  ASSERT_EQ(run({"synth", "--method", "t21", "--params", params, "--dim", "2", "--count", "3",
                 "--equality", "--output", file})
                .code,
            0);
  const Invocation b = run({"bound", "--input", file, "--method", "t21"});
  ASSERT_EQ(b.code, 0);
  const Json j = Json::parse(b.out);
  EXPECT_NEAR(j["tightness"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(j["equality"].get<bool>());
}

TEST(Cli, SynthInfeasibleBandExplains) {
  const fs::path dir = scratch("band");
  const Invocation r = run({"synth", "--method", "c23", "--params", R"({"m1":1,"M1":2,"m2":1,"M2":2})",
                     "--dim", "2", "--output", (dir / "x.json").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("do not intersect"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir / "x.json"));
}

TEST(Cli, SearchRecoversHiddenReference) {
  const Invocation r = run({"search", "--input", sample("t21_equality_hidden.json"), "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_GE(j["certificate"]["tightness"].get<double>(), 1 - 1e-8);
  EXPECT_GE(j["certificate"]["bound"].get<double>(), j["sum_seed_bound"].get<double>());
}

TEST(Cli, BatchModeNamesOutputsByStemAndCommand) {
  const fs::path in = scratch("batch_in");
  const fs::path out = scratch("batch_out");
  fs::copy_file(sample("cone_pair.json"), in / "a.json");
  fs::copy_file(sample("cancelling.json"), in / "b.json");
  fs::copy_file(sample("bad_shape.json"), in / "c.json");
  const Invocation r = run({"check", "--input-dir", in.string(), "--output", out.string(), "--method",
                     "t21"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(read_json(out / "a.check.json")["feasible"].get<bool>());
  EXPECT_FALSE(read_json(out / "b.check.json")["feasible"].get<bool>());
  EXPECT_TRUE(read_json(out / "c.check.json").contains("error"));
}

TEST(Cli, OutputFlagWritesFile) {
  const fs::path dir = scratch("output");
  const std::string file = (dir / "bound.json").string();
  const Invocation r = run({"bound", "--input", sample("cone_pair.json"), "--method", "t21", "--output",
                     file});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_json(file)["method"], "t21");
}
