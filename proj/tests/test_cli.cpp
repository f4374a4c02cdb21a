#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "adlab/cli.hpp"
#include "adlab/error.hpp"
#include "adlab/io.hpp"

using namespace adlab;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTerm = R"({"points":1,"opens":[[],[0]],"leq":[],"complete":false})";

long count(const std::string& s, const std::string& needle) {
  long n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, SpaceRoundTrip) {
  for (const auto& x : enumerate_spaces(3)) {
    const Json j = space_to_json(x);
    EXPECT_EQ(space_from_json(Json::parse(j.dump())), x);
  }
}

TEST(Json, AdFrameRoundTrip) {
  for (const auto& x : enumerate_spaces(2)) {
    for (Variant v : kAllVariants) {
      const AdFrame f = build_adO(x, v);
      EXPECT_EQ(adframe_from_json(Json::parse(adframe_to_json(f).dump())), f);
    }
  }
  const AdFrame i = ind_frame(Lattice::chain(3), Variant::Up);
  EXPECT_EQ(adframe_from_json(adframe_to_json(i)), i);
}

TEST(Json, MalformedInputs) {
  EXPECT_THROW(space_from_json(Json::parse(R"({"opens":[]})")), Error);
  EXPECT_THROW(space_from_json(Json::parse(R"({"points":1,"opens":[[3]]})")), Error);
  EXPECT_THROW(lattice_from_json(Json::parse(R"({"size":2,"leq":[[0,1]],"labels":[[0],[]]})")), Error);
  const Json f = adframe_to_json(ind_frame(Lattice::chain(2)));
  Json bad = f;
  bad["tot"].push_back({7, 0});
  EXPECT_THROW(adframe_from_json(bad), Error);
}

TEST(Dot, Examples) {
  const std::string two = render_lattice_dot(Lattice::chain(2));
  EXPECT_EQ(count(two, "[label="), 2);
  EXPECT_EQ(count(two, "->"), 1);
  EXPECT_EQ(count(render_lattice_dot(Lattice::chain(3)), "->"), 2);

  const Space term(Topology::make(1, {0, 1}), Preorder::discrete(1));
  const std::string t = render_adframe_dot(build_adO(term, Variant::Both));
  EXPECT_EQ(count(t, "[label="), 4);
  EXPECT_EQ(count(t, "label=\"tot\""), 3);
  EXPECT_EQ(count(t, "label=\"con\""), 3);
  EXPECT_EQ(count(t, "label=\"fof\""), 3);
  EXPECT_EQ(count(t, "label=\"cou\""), 3);
  EXPECT_THROW(render_lattice_dot(Lattice::chain(300)), Error);
}

TEST(Cli, CheckSweepIdempotent) {
  const CliRun r = run({"check", "--id", "IDEMPOTENT", "--sweep", "n=2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, "\n"), 48);
  EXPECT_EQ(count(r.out, "\"verdict\":\"pass\""), 48);
}

TEST(Cli, AdoOfTerm) {
  const CliRun r = run({"ado", "--in", kTerm, "--variant", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  const AdFrame f = adframe_from_json(Json::parse(r.out));
  EXPECT_EQ(f.omega.size(), 2);
  EXPECT_EQ(f.tot.count(), 3U);
  EXPECT_EQ(f.con.count(), 3U);
  EXPECT_EQ(f.fof.count(), 3U);
  EXPECT_EQ(f.cou.count(), 3U);
  EXPECT_EQ(f.variant, Variant::Both);
}

TEST(Cli, BrokenInputExitsTwo) {
  const auto dir = std::filesystem::temp_directory_path() / "adlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto broken = (dir / "broken.json").string();
  std::ofstream(broken) << R"({"points":2,"opens":[[],[1]],"leq":[]})";
  const CliRun r = run({"validate", "--in", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotATopology"), std::string::npos);
  EXPECT_EQ(count(r.err, "\n"), 1);

  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--sweep", "n=2"}).code, 2);
  EXPECT_EQ(run({"check", "--id", "NOPE", "--sweep", "n=1"}).code, 2);
  EXPECT_EQ(run({"ado", "--in", kTerm, "--variant", "sideways"}).code, 2);
  EXPECT_EQ(run({"check", "--id", "ADS-ISO", "--sweep", "n=1", "--budget-ms", "0"}).code, 2);
  EXPECT_EQ(run({"ado", "--in", "{not json"}).code, 2);
}

TEST(Cli, OutputFileAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / "adlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "term_ado.json").string();
  ASSERT_EQ(run({"ado", "--in", kTerm, "--out", out}).code, 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run({"ado", "--in", kTerm}).out);
  EXPECT_FALSE(std::filesystem::exists(out + ".tmp"));

  const std::regex ms(R"("ms":[0-9.e+-]+)");
  const CliRun a = run({"check", "--id", "ADS-ISO", "--sweep", "n=2"});
  const CliRun b = run({"check", "--id", "ADS-ISO", "--sweep", "n=2"});
  EXPECT_EQ(std::regex_replace(a.out, ms, ""), std::regex_replace(b.out, ms, ""));
}

TEST(Cli, OtherVerbs) {
  const std::string sier = R"({"points":2,"opens":[[],[1],[0,1]],"leq":[]})";
  EXPECT_EQ(run({"validate", "--in", sier}).code, 0);
  const CliRun ado = run({"ado", "--in", sier});
  const CliRun adpt = run({"adpt", "--in", ado.out});
  ASSERT_EQ(adpt.code, 0) << adpt.err;
  EXPECT_EQ(space_from_json(Json::parse(adpt.out)).size(), 2);
  EXPECT_EQ(run({"validate", "--in", ado.out}).code, 0);

  const std::string indiscrete = R"({"points":2,"opens":[[],[0,1]],"leq":[]})";
  const CliRun ads = run({"ads", "--in", indiscrete});
  ASSERT_EQ(ads.code, 0);
  EXPECT_EQ(space_from_json(Json::parse(ads.out)).size(), 2);
  const CliRun sob = run({"sobrify", "--in", indiscrete});
  ASSERT_EQ(sob.code, 0);
  EXPECT_EQ(space_from_json(Json::parse(sob.out)).size(), 1);

  const CliRun cex = run({"check", "--id", "CEX-ADS", "--in", indiscrete});
  EXPECT_EQ(cex.code, 0);
  EXPECT_NE(cex.out.find("expected-fail"), std::string::npos);

  const CliRun dot = run({"render", "--in", R"({"size":3,"leq":[[0,1],[1,2],[0,2]]})"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(count(dot.out, "->"), 2);
  EXPECT_EQ(run({"render", "--in", sier}).code, 0);

  const CliRun seeded = run({"check", "--id", "ADS-ISO", "--seed", "5"});
  EXPECT_EQ(seeded.code, 0);
  EXPECT_EQ(count(seeded.out, "\n"), 1);
}

TEST(Cli, MutatedFrameFailsValidation) {
  const Space term(Topology::make(1, {0, 1}), Preorder::discrete(1));
  AdFrame f = build_adO(term, Variant::Both);
  f.con.insert(1, 1);
  const CliRun r = run({"validate", "--in", adframe_to_json(f).dump()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"ok\": false"), std::string::npos);
  EXPECT_EQ(run({"adpt", "--in", adframe_to_json(f).dump()}).code, 2);
}

TEST(Cli, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verb"), std::string::npos);
}
