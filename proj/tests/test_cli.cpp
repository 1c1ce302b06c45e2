#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ffcensus/cli.hpp"

using namespace ffcensus::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ffcensus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const char* kHeader = "q,k,l,n,pi,lambda_sum,F,phi,main_term,abs_error,poly_bound,exp_bound,weil_ref,within_bound";

}  // namespace

TEST_CASE("degree ranges") {
  CHECK(parse_n_range("3..7").lo == 3);
  CHECK(parse_n_range("3..7").hi == 7);
  CHECK(parse_n_range("5").lo == 5);
  CHECK_THROWS(parse_n_range("7..3"));
  CHECK_THROWS(parse_n_range("a..3"));
  CHECK_THROWS(parse_n_range(""));
  CHECK(selected_degrees({7, 19}, true) == std::vector<unsigned>{7, 11, 13, 17, 19});
  CHECK(selected_degrees({1, 3}, false) == std::vector<unsigned>{1, 2, 3});
}

TEST_CASE("verify examples") {
  const Result a = invoke({"verify", "--field", "2", "--suite", "lemma14", "--n", "1..10"});
  CHECK(a.code == kExitOk);
  CHECK(lines(a.out).at(0) == "PASS lambda-total 10/10");

  const Result b = invoke({"verify", "--field", "2", "--k", "x", "--suite", "lemma11", "--n", "1..12"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.rfind("PASS lemma11", 0) == 0);
  CHECK(b.out.find("n=12") != std::string::npos);

  const Result c = invoke({"verify", "--field", "4", "--suite", "field-axioms"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.rfind("PASS field-axioms", 0) == 0);
  CHECK(c.out == invoke({"verify", "--field", "2^2", "--suite", "field-axioms"}).out);
}

TEST_CASE("verify runs every suite") {
  const Result r = invoke({"verify", "--field", "3", "--n", "1..4"});
  CHECK(r.code == kExitOk);
  std::vector<std::string> names;
  for (const auto& line : lines(r.out))
    if (line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0) names.push_back(line.substr(5, line.find(' ', 5) - 5));
  CHECK(names == std::vector<std::string>{"field-axioms", "poly-ring", "mobius-lambda", "hk-series", "lemma6",
                                          "lemma12", "lemma13", "lemma11", "theorem1", "lambda-total"});

  const Result j = invoke({"verify", "--field", "2", "--n", "1..5", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.contains("config"));
  CHECK(doc["rows"].is_array());
  CHECK(doc["suites"].size() == 10);
  CHECK(doc["suites"][0]["name"] == "field-axioms");
  CHECK(doc["suites"][0]["pass"] == true);
  CHECK(doc["suites"][0]["failed"] == 0);

  CHECK(invoke({"verify", "--suite", "nope"}).code == kExitUsage);
}

TEST_CASE("census output") {
  const Result a = invoke({"census", "--field", "2", "--k", "x", "--l", "1", "--n", "3..3", "--format", "csv"});
  CHECK(a.code == kExitOk);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == kHeader);
  CHECK(rows[1] == "2,x,1,3,2,7,4,1,2.666667,0.666667,6,2.000000,0.942809,1");

  const Result b = invoke({"census", "--field", "2", "--k", "x", "--l", "x", "--n", "3..3"});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("l not coprime to k") != std::string::npos);

  const Result c = invoke({"census", "--field", "2", "--k", "x^2+1", "--l", "all-units", "--n", "2..4"});
  CHECK(c.code == kExitOk);
  const auto crow = lines(c.out);
  REQUIRE(crow.size() == 7);  // two units, three degrees, (n, l) order
  CHECK(crow[1].rfind("2,x^2+1,1,2,", 0) == 0);
  CHECK(crow[2].rfind("2,x^2+1,x,2,", 0) == 0);
  CHECK(crow[3].rfind("2,x^2+1,1,3,", 0) == 0);

  const Result j = invoke({"census", "--field", "2", "--k", "x", "--l", "1", "--n", "3", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["main_term"] == "8/3");
  CHECK(doc["rows"][0]["abs_error"] == "2/3");
  CHECK(doc["suites"].empty());

  CHECK(invoke({"census", "--field", "2", "--l", "1", "--n", "3"}).code == kExitUsage);  // k missing
  CHECK(invoke({"census", "--field", "2", "--k", "x", "--n", "30", "--budget", "1000"}).code == kExitUsage);
}

TEST_CASE("census headline run is strictly below the Weil reference") {
  const Result r = invoke({"census", "--field", "2", "--k", "x", "--l", "all-units", "--n", "11..19", "--primes-only"});
  CHECK(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::istringstream in(rows[i]);
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 14);
    CHECK(std::stod(cells[9]) < std::stod(cells[12]));
    CHECK(cells[13] == "1");
  }
}

TEST_CASE("output is independent of the thread count") {
  const std::vector<std::string> base{"census", "--field", "3", "--k", "x^2+1", "--n", "1..7"};
  auto with = [&](const char* threads) {
    auto args = base;
    args.insert(args.end(), {"--threads", threads});
    return invoke(args).out;
  };
  const std::string one = with("1");
  CHECK(one == with("2"));
  CHECK(one == with("5"));
  CHECK(one == invoke(base).out);
}

TEST_CASE("series, factor, irreducibles") {
  const Result s = invoke({"series", "--field", "2", "--k", "x^2+x+1", "--n", "0..6"});
  CHECK(s.code == kExitOk);
  std::vector<std::string> values;
  for (const auto& line : lines(s.out)) values.push_back(line.substr(line.find(',') + 1, line.find(',', line.find(',') + 1) - line.find(',') - 1));
  CHECK(values == std::vector<std::string>{"H", "1", "-2", "1", "-2", "1", "-2", "1"});

  const Result f = invoke({"factor", "--field", "2", "x^4+x^2"});
  CHECK(f.code == kExitOk);
  CHECK(f.out == "x^2 * (x+1)^2\n");
  CHECK(invoke({"factor", "--field", "2", "x^2+x^2"}).code == kExitUsage);
  CHECK(invoke({"factor", "--field", "2", "0"}).code == kExitUsage);

  const Result i = invoke({"irreducibles", "--field", "2", "--n", "3"});
  CHECK(i.code == kExitOk);
  CHECK(i.out == "x^3+x+1, x^3+x^2+1\n");
}

TEST_CASE("usage errors never escape as exceptions") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"census", "--field", "2", "--k", "x", "--n", "9..3"},
           {"census", "--field", "6", "--k", "x", "--n", "3"},
           {"census", "--field", "2", "--k", "x", "--n", "3", "--format", "xml"},
           {"series", "--field", "2", "--k", "2*x"},
           {"verify", "--budget", "-5"},
           {"irreducibles", "--field", "2^2:1,0,1", "--n", "2"},
       }) {
    Result r{0, "", ""};
    CHECK_NOTHROW(r = invoke(args));
    CHECK(r.code == kExitUsage);
  }
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "ffcensus_cli_test_out.csv";
  const Result r = invoke({"census", "--field", "2", "--k", "x", "--l", "1", "--n", "3", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kHeader);
  in.close();
  std::remove(path.c_str());
}
