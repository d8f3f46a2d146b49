#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mucrit/cli.hpp"
#include "mucrit/search.hpp"

using namespace mucrit;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2 with usage on the error stream") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"search"},
           {"search", "nonsense"},
           {"verify-f41", "--threads", "0"},
           {"verify-f41", "--format", "xml"},
           {"check", "lemma0"},
           {"check", "lemmata"},
           {"search", "diffset", "--p", "31", "--d", "20"},
           {"search", "diffset", "--p", "31"},
           {"search", "sumset", "--p", "15", "--d", "7"},
       }) {
    CAPTURE(args.size() ? args[0] : std::string("(none)"));
    const auto o = call(args);
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
  }
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verification subcommands") {
  const auto f41 = call({"verify-f41"});
  CHECK(f41.code == 0);
  CHECK(f41.out.rfind("verify-f41: ok", 0) == 0);
  CHECK(call({"verify-identities"}).code == 0);
  CHECK(call({"check", "lemma13"}).code == 0);
  const auto op = call({"verify-operator", "--format", "json"});
  CHECK(op.code == 1);
  CHECK(op.out.find("\"ok\": false") != std::string::npos);
  const auto csv = call({"verify-f41", "--format", "csv"});
  CHECK(csv.out.rfind("report,label,ok,detail\n", 0) == 0);
}

TEST_CASE("search subcommands") {
  const auto lev = call({"search", "levson", "--alpha-max", "3000", "--format", "json"});
  CHECK(lev.code == 0);
  const SearchResult r = search_result_from_json(lev.out);
  CHECK(r.primes_scanned == 586);
  CHECK(r.witnesses.size() == 2);

  const auto qr = call({"search", "sumset", "--p", "19", "--d", "9"});
  CHECK(qr.code == 0);
  CHECK(qr.out.find("verdict: none") != std::string::npos);

  // d = 6 exact difference sets are expected, as are balanced mu_4 splits
  CHECK(call({"search", "diffset", "--p", "13", "--d", "6"}).code == 0);
  CHECK(call({"search", "sumset", "--p", "13", "--d", "4"}).code == 0);
  CHECK(call({"search", "threefold", "--p", "13", "--d", "4"}).code == 0);
  CHECK(call({"search", "problem1", "--p", "13", "--alpha-max", "5"}).code == 0);
  const auto p2 = call({"search", "problem2", "--p", "41", "--alpha", "5", "--format", "csv"});
  CHECK(p2.code == 0);
  CHECK(p2.out.find("0 1 2 10 33") != std::string::npos);

  const auto tight = call({"search", "sumset", "--p", "61", "--d", "30", "--budget", "1"});
  CHECK(tight.code == 0);
  CHECK(tight.out.find("verdict: exhausted") != std::string::npos);
  CHECK(tight.err.find("exhausted") != std::string::npos);
}

TEST_CASE("json output ignores the thread count") {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"search", "sumset", "--p", "61", "--d", "4"},
           {"search", "diffset", "--p", "181", "--d", "6"},
           {"verify-residues"},
       }) {
    std::string first;
    for (const char* t : {"1", "4", "16"}) {
      auto args = base;
      args.insert(args.end(), {"--format", "json", "--threads", t});
      const auto o = call(args);
      CHECK(o.code == 0);
      if (first.empty()) first = o.out;
      CHECK(o.out == first);
    }
  }
}

TEST_CASE("output file and timing") {
  const auto path = std::filesystem::temp_directory_path() / "mucrit_cli_test.json";
  const auto o = call({"search", "sumset", "--p", "13", "--d", "4", "--format", "json", "--out", path.string(),
                       "--timing"});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(o.err.find("elapsed:") != std::string::npos);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(search_result_from_json(text.str()).witnesses.size() == 1);
  std::filesystem::remove(path);
}
