#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "bellperm/bp2.hpp"
#include "cli.hpp"

using namespace bellperm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, oracle::Hooks const& hooks = {}) {
  std::ostringstream out, err;
  int const code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::size_t lines(std::string const& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("encode and decode") {
  CHECK(run({"decode", "--code", "inom", "4 9 7 8 1 2 5 3 6"}).out == "1 2 1 1 3 2 3 4 2\n");
  CHECK(run({"encode", "--code", "inom", "1 2 3"}).out == "1 2 3\n");
  CHECK(run({"encode", "--code", "phi", "1 2 1 1 3 2 3 4 2"}).out == "5 6 8 1 7 9 3 4 2\n");
  CHECK(run({"encode", "--code", "inom", "121132342"}).out == "4 9 7 8 1 2 5 3 6\n");
  CHECK(run({"decode", "--code", "phi", "5 6 8 1 7 9 3 4 2"}).out == "1 2 1 1 3 2 3 4 2\n");
  auto const bad = run({"encode", "--code", "inom", "1 3 2"});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("position 2") != std::string::npos);
  CHECK(run({"encode", "--code", "lehmer", "1"}).code == cli::kUsageError);
}

TEST_CASE("convert") {
  CHECK(run({"convert", "chi", "1 4 7/2 9/3 5 10/6 8"}).out == "7 9 10 8 3 1 4 6 2 5\n");
  CHECK(run({"convert", "lambda", "4 5 2 1 3"}).out == "1 4/2 3 5\n");
  CHECK(run({"convert", "beta", "(9 7 2 1)(6 5 3)(8 4)"}).out == "(9 7 2 6 5 3 8 4 1)\n");
  CHECK(run({"convert", "theta", "(1 4 9 7 3 5 8)(2 6)"}).out == "(4 3 1)(6 2)(5)(9 7)(8)\n");
  CHECK(run({"convert", "theta", "--one-line", "(1 4 9 7 3 5 8)(2 6)"}).out ==
        "4 6 1 3 5 2 9 8 7\n");
  CHECK(run({"convert", "mu", "1 2 7 9/3 5 6/4 8", "--cycles"}).out == "(9 7 2 1)(6 5 3)(8 4)\n");
  CHECK(run({"convert", "nu", "1 1 3"}).out == "1 1 2\n");
  CHECK(run({"convert", "zeta", "1 1 2"}).out == "1 1 3\n");
  CHECK(run({"convert", "canon", "1 3/2 4 6/5 7 8"}).out == "1 2 1 2 3 2 3 3\n");
  CHECK(run({"convert", "from-canon", "1 2 1 2 3 2 3 3"}).out == "1 3/2 4 6/5 7 8\n");

  auto const not_rgf = run({"convert", "from-canon", "1 1 3"});
  CHECK(not_rgf.code == cli::kDomainFailure);
  CHECK(not_rgf.err.find("length 3") != std::string::npos);
  CHECK(run({"convert", "lambda", "2 1 3"}).code == cli::kDomainFailure);
  CHECK(run({"convert", "beta", "2 3 1"}).code == cli::kDomainFailure);
  CHECK(run({"convert", "chi", "1 2/2"}).code == cli::kUsageError);
  CHECK(run({"convert", "lambda", "1 1"}).code == cli::kUsageError);
}

TEST_CASE("classify") {
  auto const no = run({"classify", "2 1 3"});
  CHECK(no.code == cli::kOk);
  CHECK(no.out.find("bp2-code: false") != std::string::npos);
  CHECK(no.out.find("bp2-characterization: false") != std::string::npos);
  CHECK(no.out.find("bp2-reduction: false") != std::string::npos);
  CHECK(no.out.find("inom-code: 1 1 3") != std::string::npos);
  CHECK(no.out.find("witness: code prefix <1 1 3>") != std::string::npos);

  auto const id = run({"classify", "1 2 3"});
  CHECK(id.out.find("bp2-code: true") != std::string::npos);
  CHECK(id.out.find("bp1: true") != std::string::npos);
  CHECK(id.out.find("k: 3") != std::string::npos);

  auto const gamma = run({"classify", "2 4 5 9 8 7 3 1 6"});
  CHECK(gamma.out.find("bp2-characterization: false") != std::string::npos);
  CHECK(gamma.out.find("witness: gamma_6 = 8 > 7 = alpha_6") != std::string::npos);

  auto const js = run({"--format", "json-lines", "classify", "2 4 5 9 8 7 3 1 6"});
  auto const record = nlohmann::json::parse(js.out);
  CHECK(record["kind"] == "report");
  CHECK(record["payload"]["witness_index"] == 6);
  CHECK(record["payload"]["bp2_code"] == false);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "rgf", "--n", "3"}).out == "1 1 1\n1 1 2\n1 2 1\n1 2 2\n1 2 3\n");
  auto const bp2 = run({"enumerate", "bp2", "--n", "3"});
  CHECK(lines(bp2.out) == 5);
  CHECK(bp2.out.find("2 1 3\n") == std::string::npos);
  CHECK(run({"enumerate", "partitions", "--n", "1"}).out == "1\n");
  CHECK(lines(run({"enumerate", "partitions", "--n", "5", "--k", "2"}).out) == 15);
  CHECK(lines(run({"enumerate", "bp1", "--n", "5"}).out) == 52);
  CHECK(lines(run({"enumerate", "bp2", "--n", "6", "--limit", "10"}).out) == 10);
  CHECK(run({"enumerate", "rgf", "--n", "3", "--k", "2"}).out == "1 1 2\n1 2 1\n1 2 2\n");
  CHECK(run({"enumerate", "bp1", "--n", "3", "--k", "1", "--cycles"}).out == "(3 2 1)\n");
  CHECK(run({"enumerate", "rgf", "--n", "0"}).code == cli::kUsageError);
  CHECK(run({"enumerate", "bp2", "--n", "3", "--k", "4"}).code == cli::kUsageError);
  CHECK(run({"--order", "gray", "enumerate", "rgf", "--n", "3"}).code == cli::kUsageError);
}

TEST_CASE("json-lines has one record per text line") {
  for (auto const* kind : {"rgf", "partitions", "bp2", "bp1"}) {
    auto const text = run({"enumerate", kind, "--n", "4"});
    auto const js = run({"--format", "json-lines", "enumerate", kind, "--n", "4"});
    CHECK(lines(text.out) == lines(js.out));
    std::istringstream in(js.out);
    std::istringstream tin(text.out);
    std::string line, tline;
    while (std::getline(in, line) && std::getline(tin, tline)) {
      auto const record = nlohmann::json::parse(line);
      CHECK(record["n"] == 4);
      CHECK(record["payload"] == tline);
    }
  }
}

TEST_CASE("count") {
  CHECK(run({"count", "stirling", "--n", "4", "--k", "2"}).out == "7\n");
  CHECK(run({"count", "bell", "--n", "0"}).out == "1\n");
  CHECK(run({"count", "bell", "--n", "30"}).out == "846749014511809332450147\n");
  CHECK(run({"count", "bp2-table", "--n", "4"}).out == "1 7 6 1\nsum 15\n");
  CHECK(run({"count", "singleton-class", "--n", "4", "--k", "3"}).out == "3\n");
  CHECK(run({"count", "stirling", "--n", "3", "--k", "4"}).code == cli::kUsageError);
  CHECK(run({"count", "stirling", "--n", "3"}).code == cli::kUsageError);
  auto const js = run({"--format", "json-lines", "count", "bp2-table", "--n", "4"});
  auto const record = nlohmann::json::parse(js.out);
  CHECK(record["kind"] == "count");
  CHECK(record["payload"]["row"] == "1 7 6 1");
  CHECK(record["payload"]["sum"] == "15");
}

TEST_CASE("verify") {
  auto const ok = run({"verify", "--n-max", "6"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--n", "1"}).code == cli::kOk);
  CHECK(run({"verify", "--n-max", "3", "--check", "nope"}).code == cli::kUsageError);
  CHECK(run({"verify", "--n-max", "9", "--check", "bell-count"}).code == cli::kUsageError);

  oracle::Hooks broken;
  broken.bp2_recognizer = [](Permutation const& s) {
    return is_bp2_by_code(s) != (s == Permutation{2, 4, 3, 1});
  };
  auto const caught = run({"verify", "--n-max", "4", "--check", "recognizer-agreement"}, broken);
  CHECK(caught.code == cli::kDomainFailure);
  CHECK(caught.out.find("FAIL recognizer-agreement n=4") != std::string::npos);
  CHECK(caught.out.find("2 4 3 1 [characterization]") != std::string::npos);

  auto const js = run({"--format", "json-lines", "verify", "--n-max", "2", "--check", "diagram"});
  CHECK(lines(js.out) == 2);
}
