#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "mingrp/lattice.hpp"
#include "mingrp/perm.hpp"

using namespace mingrp;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "mingrp");
  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir
{
public:
  TempDir()
  : path_(std::filesystem::temp_directory_path()
          / ("mingrp-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())
             + "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name()))
  {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(std::string const &name, std::string const &text) const
  {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string str() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

void strip_timings(nlohmann::json &j)
{
  if (j.is_object()) {
    j.erase("timings");
    for (auto &[key, value] : j.items())
      strip_timings(value);
  } else if (j.is_array()) {
    for (auto &value : j)
      strip_timings(value);
  }
}

} // namespace

TEST(Cli, Classify)
{
  auto r = run({"classify", "L2(2^6)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("list 3: yes, item 1"), std::string::npos);
  EXPECT_NE(r.out.find("6 = 2*3"), std::string::npos);

  r = run({"classify", "L3(3)"});
  EXPECT_NE(r.out.find("list 1: yes, item 5"), std::string::npos);

  r = run({"classify", "L2(6)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not a prime power"), std::string::npos);

  r = run({"classify", "L2(9)", "--json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["normalized_name"], "A6");
  EXPECT_EQ(j["list3"]["item"], 5);
  EXPECT_EQ(j["order"], 360);
}

TEST(Cli, Construct)
{
  auto r = run({"construct", "A5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# order: 60"), std::string::npos);
  EXPECT_NE(r.out.find("# degree: 5"), std::string::npos);
  auto g = parse_generators(r.out);
  EXPECT_EQ(g.generators().size(), 2u);
  EXPECT_EQ(g.order(), 60u);

  r = run({"construct", "Sz(8)"});
  EXPECT_NE(r.out.find("# degree: 65"), std::string::npos);
  EXPECT_NE(r.out.find("# order: 29120"), std::string::npos);
  EXPECT_EQ(parse_generators(r.out).order(), 29120u);

  r = run({"construct", "E8(2)"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("constructor not supported"), std::string::npos);

  r = run({"construct", "L2(7)", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 168);
  EXPECT_EQ(j["degree"], 8);
  EXPECT_EQ(j["images"].size(), j["generators"].size());

  r = run({"construct", "A5", "--format", "images"});
  EXPECT_NE(r.out.find("2 3 1 4 5"), std::string::npos);

  EXPECT_EQ(run({"construct", "A5", "--format", "svg"}).code, 2);
}

TEST(Cli, CyclesRoundTripPreservesOrder)
{
  for (auto name : {"A5", "S6", "L2(8)", "L2(16)", "L3(3)", "U3(3)", "C7"}) {
    auto r = run({"construct", name});
    ASSERT_EQ(r.code, 0) << name;
    auto j = nlohmann::json::parse(run({"construct", name, "--format", "json"}).out);
    EXPECT_EQ(parse_generators(r.out).order(), j["order"].get<std::uint64_t>()) << name;
  }
}

TEST(Cli, Verify)
{
  auto r = run({"verify", "A6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("case: 4"), std::string::npos);

  r = run({"verify", "A7"});
  EXPECT_EQ(r.code, 4);

  r = run({"verify", "A7", "--limit", "2600", "--json"});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["case"], "violation");
  EXPECT_EQ(j["condition"]["witness"]["maximal"]["order"], 360);

  TempDir dir;
  auto s4 = dir.write("s4.gens", "# S4\n(1,2)\n(1,2,3,4)\n");
  r = run({"verify", "--gens", s4});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("case: 1"), std::string::npos);

  auto bad = dir.write("bad.gens", "(1,2\n");
  EXPECT_EQ(run({"verify", "--gens", bad}).code, 2);
  EXPECT_EQ(run({"verify", "--gens", dir.str() + "/missing.gens"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "A5", "--gens", s4}).code, 2);
  EXPECT_EQ(run({"verify", "M11"}).code, 3);
  EXPECT_EQ(run({"verify", "A5", "--limit", "0"}).code, 2);
}

TEST(Cli, Usage)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("corpus"), std::string::npos);
}

TEST(Cli, OutputFile)
{
  TempDir dir;
  auto path = dir.str() + "/report.txt";
  auto r = run({"-o", path, "classify", "A5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("name: A5"), std::string::npos);
}

TEST(Cli, CorpusLimitSkips)
{
  auto r = run({"corpus", "--limit", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIPPED"), std::string::npos);
  EXPECT_NE(r.out.find("10 skipped"), std::string::npos);
}

TEST(Cli, CorpusDirectoryRows)
{
  TempDir dir;
  dir.write("a_q8.gens", "# expect: 1\n(1,2,4,7)(3,6,8,5)\n(1,3,4,8)(2,5,7,6)\n");
  auto r = run({"corpus", "--limit", "200", "--dir", dir.str()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("a_q8.gens"), std::string::npos);

  dir.write("b_broken.gens", "# expect: 2\n(1,2,3\n");
  r = run({"corpus", "--limit", "200", "--dir", dir.str()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("b_broken.gens"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);

  TempDir other;
  other.write("wrong.gens", "# expect: 3\n(1,2)\n(1,2,3,4)\n");
  r = run({"corpus", "--limit", "200", "--dir", other.str()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("expected case 3, got 1"), std::string::npos);
}

TEST(Cli, CorpusJsonIsDeterministic)
{
  auto first = run({"corpus", "--json", "--jobs", "4"});
  auto second = run({"corpus", "--json", "--jobs", "1"});
  EXPECT_EQ(first.code, 0);
  auto a = nlohmann::json::parse(first.out);
  auto b = nlohmann::json::parse(second.out);
  strip_timings(a);
  strip_timings(b);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["rows"].size(), 12u);
  EXPECT_EQ(a["summary"]["pass"], 12);
  EXPECT_EQ(a["rows"][0]["label"], "S4");
}
