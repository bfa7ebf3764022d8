#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mv/errors.hpp"
#include "mvcli/app.hpp"
#include "mvcli/cache.hpp"
#include "mvcli/render.hpp"
#include "mvcli/stratum_spec.hpp"

namespace fs = std::filesystem;
using mv::BigRational;
using mv::PiValue;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mvcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mv_cli_test_" + name);
  fs::remove(p);
  return p;
}

}  // namespace

TEST(ParseStratum, AcceptedForms) {
  EXPECT_EQ(mvcli::parse_stratum("2,1,1").degrees(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(mvcli::parse_stratum("H(2, 1,1)").degrees(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(mvcli::parse_stratum(" 4 ").degrees(), (std::vector<int>{4}));
  EXPECT_TRUE(mvcli::parse_stratum("H()").degrees().empty());
  EXPECT_TRUE(mvcli::parse_stratum("").degrees().empty());
  for (const char* bad : {"3", "1,", "a", "H(1,1", "1,,1", "-2", "H[2]", "2.0"}) {
    EXPECT_THROW(mvcli::parse_stratum(bad), mv::InvalidStratum) << bad;
  }
}

TEST(Cli, VolumeFormats) {
  EXPECT_EQ(run({"volume", "2"}).out, "1/120 * pi^4\n");
  EXPECT_EQ(run({"volume", "H(1,1)", "--format", "decimal", "--digits", "10"}).out, "0.7215488225\n");
  EXPECT_EQ(run({"volume", "2", "1,1"}).out, "H(2) 1/120 * pi^4\nH(1,1) 1/135 * pi^4\n");
  const auto r = run({"volume", "1,1", "--format", "decimal"});
  EXPECT_EQ(r.out, "0.72154882247409212767733579769411193518316730127915\n");
}

TEST(Cli, JsonRoundTrip) {
  for (const char* spec : {"2", "1,1", "3,1", "2,1,1", "1,1,1,1,1,1"}) {
    const auto r = run({"volume", spec, "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(mvcli::pi_value_from_json(j), mv::volume_value(mvcli::parse_stratum(spec)));
    EXPECT_EQ(j.at("relative_error").get<std::string>(), mv::volume(mvcli::parse_stratum(spec)).relative_error_text);
  }
  for (const PiValue& v : {PiValue(), PiValue::monomial(BigRational(-7, 3), -2), PiValue::rational(BigRational(5))}) {
    EXPECT_EQ(mvcli::pi_value_from_json(mvcli::pi_value_json(v)), v);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"volume", "3"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"volume", "x"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"volume"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"frobnicate"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"volume", "2", "--digits", "91"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"volume", "2", "--format", "latex"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"volume", "1,1,1,1,1,1,1,1"}).code, mvcli::kInfeasible);
  EXPECT_EQ(run({"volume", "2", "--max-weight", "2"}).code, mvcli::kInfeasible);
  EXPECT_EQ(run({"volume", "1,1,1,1,1,1,1,1", "--max-weight", "16"}).code, mvcli::kOk);
  EXPECT_EQ(run({"table", "--max-size", "8"}).code, mvcli::kInfeasible);
  EXPECT_EQ(run({"sv", "1,1", "--kind", "sc", "--zeros", "1"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"sv", "1,1", "--kind", "sc", "--zeros", "1,3"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"sv", "2", "--kind", "warp"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"sv", "2", "--kind", "sc2"}).code, mvcli::kInvalidInput);
  EXPECT_EQ(run({"--help"}).code, mvcli::kOk);
}

TEST(Cli, Principal) {
  EXPECT_EQ(run({"principal", "3", "--verify"}).out, "1/4860 * pi^6\nmatches general pipeline: yes\n");
  EXPECT_EQ(run({"principal", "5"}).out, "23357/157621464000 * pi^10\n");
  EXPECT_EQ(run({"principal", "5", "--verify"}).code, mvcli::kInfeasible);
  EXPECT_EQ(run({"principal", "1"}).code, mvcli::kInvalidInput);
}

TEST(Cli, SiegelVeech) {
  const auto sc = run({"sv", "H(1,1)", "--kind", "sc", "--zeros", "1,2"});
  EXPECT_EQ(sc.out,
            "sc H(1,1) zeros 1,2\nvalue: 27/8\npi exponent class: 0\npredictor: 4\n"
            "relative deviation: -0.156250000000000\n");
  const auto loop = run({"sv", "3,1", "--kind", "loop", "--zeros", "1", "--angle", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(loop.out);
  EXPECT_EQ(j.at("kind"), "loop_per_angle");
  EXPECT_EQ(mvcli::pi_value_from_json(j), PiValue::monomial(BigRational(315, 8), -2));
  EXPECT_EQ(j.at("pi_exp_class"), -2);
  const auto sc2 = run({"sv", "1,1,1,1", "--kind", "sc2"});
  EXPECT_EQ(sc2.code, 0);
  EXPECT_NE(sc2.out.find("warning: uses the torus convention"), std::string::npos);
  EXPECT_NE(run({"sv", "1,1", "--kind", "area1"}).out.find("value: 15/4 * pi^-2"), std::string::npos);
}

TEST(Cli, TableMentionsOrdering) {
  const auto r = run({"table", "--max-size", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H(1,1,1,1)"), std::string::npos);
  EXPECT_NE(r.out.find("g=3: smallest H(1,1,1,1), largest H(4) (as observed)"), std::string::npos);
}

TEST(Cache, RoundTripThroughFile) {
  const fs::path path = temp_file("roundtrip.json");
  mv::clear_volume_caches();
  ASSERT_EQ(run({"volume", "2", "1,1", "2,2", "--cache", path.string()}).code, 0);
  ASSERT_TRUE(fs::exists(path));
  std::ifstream first(path);
  const std::string saved((std::istreambuf_iterator<char>(first)), {});
  const auto doc = nlohmann::json::parse(saved);
  EXPECT_EQ(doc.at("version"), 1);
  EXPECT_EQ(doc.at("entries").at("2,2").at("den"), "50400");

  mv::clear_volume_caches();
  mvcli::load_cache(path);
  EXPECT_EQ(mvcli::cache_to_json(), doc);
  mvcli::save_cache(path);
  std::ifstream second(path);
  EXPECT_EQ(std::string((std::istreambuf_iterator<char>(second)), {}), saved);
  fs::remove(path);
}

TEST(Cache, WarmRunIsByteIdentical) {
  const fs::path path = temp_file("warm.json");
  mv::clear_volume_caches();
  const auto cold = run({"table", "--cache", path.string()});
  mv::clear_volume_caches();
  const auto warm = run({"table", "--cache", path.string()});
  EXPECT_EQ(cold.out, warm.out);
  fs::remove(path);
}

TEST(Cache, RejectsWrongExponent) {
  const fs::path path = temp_file("bad.json");
  std::ofstream(path) << R"({"version": 1, "entries": {"2": {"num": "1", "den": "120", "pi_exp": 6}}})";
  mv::clear_volume_caches();
  const auto r = run({"volume", "2", "--cache", path.string()});
  EXPECT_EQ(r.code, mvcli::kInvalidInput);
  EXPECT_NE(r.err.find("pi^4"), std::string::npos);
  std::ofstream(path) << "{not json";
  EXPECT_EQ(run({"volume", "2", "--cache", path.string()}).code, mvcli::kInvalidInput);
  std::ofstream(path) << R"({"version": 2, "entries": {}})";
  EXPECT_EQ(run({"volume", "2", "--cache", path.string()}).code, mvcli::kInvalidInput);
  fs::remove(path);
}

TEST(Cache, EnvironmentOverridesFlag) {
  const fs::path env_path = temp_file("env.json");
  const fs::path flag_path = temp_file("flag.json");
  ::setenv("MV_CACHE", env_path.string().c_str(), 1);
  EXPECT_EQ(mvcli::resolve_cache_path(flag_path.string()), env_path);
  EXPECT_EQ(run({"volume", "2", "--cache", flag_path.string()}).code, 0);
  EXPECT_TRUE(fs::exists(env_path));
  EXPECT_FALSE(fs::exists(flag_path));
  ::unsetenv("MV_CACHE");
  EXPECT_EQ(mvcli::resolve_cache_path(flag_path.string()), flag_path);
  EXPECT_FALSE(mvcli::resolve_cache_path("").has_value());
  fs::remove(env_path);
}
