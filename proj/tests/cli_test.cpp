#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "primechar/cli.hpp"

namespace primechar::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliCheckTest, ExitCodesFollowVerdicts) {
  auto r = invoke({"check", "--n", "10", "--p", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"({"mode":"theorem1","p":"7","k":"1","n":"10","binom_mod":"1","floor_mod":"1",)"
            R"("modulus":"7","holds":true})"
            "\n");

  r = invoke({"check", "--n", "6", "--p", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(R"("binom_mod":"3","floor_mod":"1","modulus":"4","holds":false)"),
            std::string::npos);

  r = invoke({"check", "--n", "14", "--p", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("mode":"theorem31","p":"3","k":"2","n":"14")"), std::string::npos);
}

TEST(CliCheckTest, CsvOutputAndUsageErrors) {
  auto r = invoke({"check", "--n", "6", "--p", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "mode,p,k,n,binom_mod,floor_mod,modulus,holds\ntheorem1,4,1,6,3,1,4,false\n");

  EXPECT_EQ(invoke({"check", "--n", "1x0", "--p", "7"}).code, 2);
  EXPECT_EQ(invoke({"check", "--n", "-5", "--p", "7"}).code, 2);
  EXPECT_EQ(invoke({"check", "--n", "10"}).code, 2);
  EXPECT_EQ(invoke({"check", "--n", "10", "--p", "1"}).code, 2);
  EXPECT_EQ(invoke({"check", "--n", "10", "--p", "4", "--k", "2"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  const auto bad = invoke({"check", "--n", "abc", "--p", "7"});
  EXPECT_FALSE(bad.err.empty());
}

TEST(CliCheckTest, ArbitrarySizeNumerals) {
  const std::string n = "1" + std::string(60, '0');
  const auto r = invoke({"check", "--n", n, "--p", "13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"n\":\"" + n + "\""), std::string::npos);
}

TEST(CliPrimeTestTest, Verdicts) {
  auto r = invoke({"prime-test", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "prime");

  r = invoke({"prime-test", "9"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "composite");
  EXPECT_EQ(j["n"], "12");
  EXPECT_EQ(j["binom_mod"], "4");

  EXPECT_EQ(invoke({"prime-test", "1"}).code, 2);
  EXPECT_EQ(invoke({"prime-test", "seven"}).code, 2);
}

TEST(CliWitnessTest, Records) {
  auto r = invoke({"witness", "4"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["q"], "2");
  EXPECT_EQ(j["x"], "2");
  EXPECT_EQ(j["n"], "6");
  EXPECT_EQ(j["binom_mod"], "3");
  EXPECT_EQ(j["floor_mod"], "1");
  EXPECT_EQ(j["modulus"], "4");

  r = invoke({"witness", "12"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], "14");
  EXPECT_EQ(j["cofactor"], "3");
  EXPECT_EQ(j["binom_mod"], "3");

  r = invoke({"witness", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not composite"), std::string::npos);
}

TEST(CliScanTest, Theorem1CountsOnlyPrimeFailuresAsUnexpected) {
  const auto r = invoke({"scan", "--mode", "theorem1", "--p", "2..30", "--n-max", "500",
                         "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u + 29u * 501u);
  EXPECT_EQ(rows[0], "mode,p,k,n,binom_mod,floor_mod,modulus,holds");
  EXPECT_EQ(rows[1], "theorem1,2,1,0,0,0,2,true");
  EXPECT_NE(r.err.find("unexpected_failures=0"), std::string::npos);
  EXPECT_EQ(r.err.find("fails=0 "), std::string::npos);
}

TEST(CliScanTest, JsonlAndCsvCarryIdenticalRecords) {
  for (const std::string mode : {"theorem1", "theorem31", "lemma32"}) {
    const std::vector<std::string> base{"scan", "--mode", mode, "--p", "2..7", "--n-max", "60"};
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "jsonl"});
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv", "--jobs", "1"});
    const auto j = invoke(json_args);
    const auto c = invoke(csv_args);
    EXPECT_EQ(j.code, c.code);
    const auto jl = lines(j.out);
    const auto cl = lines(c.out);
    ASSERT_EQ(jl.size() + 1, cl.size());
    const auto header = lines(cl[0] + "\n")[0];
    std::vector<std::string> names;
    std::stringstream hs(header);
    for (std::string f; std::getline(hs, f, ',');) names.push_back(f);
    for (std::size_t i = 0; i < jl.size(); ++i) {
      const auto obj = nlohmann::ordered_json::parse(jl[i]);
      std::vector<std::string> from_json;
      std::vector<std::string> keys;
      for (const auto& [key, value] : obj.items()) {
        keys.push_back(key);
        from_json.push_back(value.is_boolean() ? (value.get<bool>() ? "true" : "false")
                                               : value.get<std::string>());
      }
      ASSERT_EQ(keys, names);
      std::vector<std::string> from_csv;
      std::stringstream rs(cl[i + 1]);
      for (std::string f; std::getline(rs, f, ',');) from_csv.push_back(f);
      ASSERT_EQ(from_json, from_csv) << mode << " row " << i;
    }
  }
}

TEST(CliScanTest, Theorem31AndLemma32) {
  auto r = invoke({"scan", "--mode", "theorem31", "--p", "2..7", "--n-max", "400"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("fails=0 "), std::string::npos);
  // k runs while p^k <= n_max: 2^1..2^8, 3^1..3^5, 5^1..5^3, 7^1..7^3
  EXPECT_EQ(lines(r.out).size(), (8u + 5u + 3u + 3u) * 401u);

  r = invoke({"scan", "--mode", "lemma32", "--p", "2..3", "--n-max", "2000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 2u * 2000u * 3u * 3u);
  EXPECT_EQ(r.out.find("\"holds\":false"), std::string::npos);
  EXPECT_EQ(lines(r.out)[0],
            R"({"mode":"lemma32","p":"2","k":"0","x":"1","s":"1","binom_mod":"0",)"
            R"("floor_mod":"0","modulus":"1","holds":true,"hypothesis":true})");
}

TEST(CliScanTest, ParallelOutputIsDeterministic) {
  const std::vector<std::string> args{"scan", "--mode", "theorem1", "--p", "2..40", "--n-max", "100"};
  auto serial = args;
  serial.insert(serial.end(), {"--jobs", "1"});
  auto wide = args;
  wide.insert(wide.end(), {"--jobs", "8"});
  EXPECT_EQ(invoke(serial).out, invoke(wide).out);
}

TEST(CliScanTest, UsageErrors) {
  EXPECT_EQ(invoke({"scan", "--mode", "theorem9", "--p", "2..7", "--n-max", "10"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--mode", "theorem1", "--p", "9..7", "--n-max", "10"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--mode", "theorem1", "--p", "1..7", "--n-max", "10"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--mode", "theorem1", "--p", "2..x", "--n-max", "10"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--mode", "theorem1", "--p", "2..7"}).code, 2);
}

TEST(CliRangeTest, Parses) {
  EXPECT_EQ(parse_range("2..30"), std::make_pair(Natural(2), Natural(30)));
  EXPECT_EQ(parse_range("11"), std::make_pair(Natural(11), Natural(11)));
  EXPECT_THROW(parse_range("2.30"), InvalidArgument);
}

}  // namespace
}  // namespace primechar::cli
