#include <doctest.h>

#include <fstream>
#include <sstream>

#include <unistd.h>

#include "incline/cli.hpp"
#include "incline/errors.hpp"
#include "incline/json_io.hpp"

using namespace incline;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("incline_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kTwoChain = R"({"kind":"table","elements":["0","1"],"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]]})";

}  // namespace

TEST_CASE("verify-lemma") {
  auto r = run({"verify-lemma", "--n", "3", "--long", "2", "--short", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("count = 0\n") != std::string::npos);
  CHECK(r.out.find("examined = 27\n") != std::string::npos);

  r = run({"verify-lemma", "--n", "2", "--long", "3", "--short", "1", "--out", "-"});
  CHECK(r.status == 1);
  CHECK(r.out.find("1 2 2 1 : no reduction of length 1\n") != std::string::npos);
  CHECK(r.out.find("count = 2\n") != std::string::npos);
  const auto doc = Json::parse(r.out.substr(r.out.find('{')));
  CHECK(doc["failures"] == Json::array({"1 2 2 1", "2 1 1 2"}));
  CHECK(doc["examined"] == 16);
  CHECK_FALSE(doc.contains("elapsed_ms"));

  r = run({"verify-lemma", "--n", "2", "--long", "2", "--short", "2", "--timing", "--out", "-"});
  CHECK(r.out.find("\"elapsed_ms\"") != std::string::npos);
}

TEST_CASE("verify-lemma usage errors") {
  CHECK(run({"verify-lemma", "--n", "1"}).status == 2);
  CHECK(run({"verify-lemma", "--long", "0"}).status == 2);
  CHECK(run({"verify-lemma", "--mode", "fast"}).status == 2);
  CHECK(run({"verify-lemma", "--n", "2", "--primes", "2,3,5,9"}).status == 2);
  CHECK(run({"verify-lemma", "--bogus"}).status == 2);
  CHECK(run({}).status == 2);
  const auto r = run({"verify-lemma", "--n", "x"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify-lemma with a custom labeling") {
  const auto r = run({"verify-lemma", "--n", "2", "--long", "3", "--short", "1", "--mode", "prime-code", "--primes",
                      "101,7,13,3"});
  CHECK(r.status == 1);
  CHECK(r.out.find("count = 2\n") != std::string::npos);
}

TEST_CASE("check-theorem") {
  auto r = run({"check-theorem", "--incline", "boolean", "--out", "-"});
  CHECK(r.status == 0);
  CHECK(r.out.find("population = exhaustive\n") != std::string::npos);
  CHECK(r.out.find("examined = 512\n") != std::string::npos);
  CHECK(r.out.find("violations = 0\n") != std::string::npos);

  r = run({"check-theorem", "--incline", "fuzzy-min", "--trials", "1000", "--seed", "42"});
  CHECK(r.status == 0);
  CHECK(r.out.find("examined = 1000\n") != std::string::npos);

  r = run({"check-theorem", "--incline", "tropical", "--trials", "0"});
  CHECK(r.status == 0);
  CHECK(r.out.find("examined = 0\n") != std::string::npos);

  const std::string noncomm =
      write_file("noncomm.json", R"({"kind":"table","elements":["0","1"],"add":[[0,1],[1,1]],"mul":[[0,0],[1,1]]})");
  r = run({"check-theorem", "--incline", noncomm});
  CHECK(r.status == 2);
  CHECK(r.err.find("not commutative") != std::string::npos);

  CHECK(run({"check-theorem", "--incline", "fuzzy-median"}).status == 2);
  CHECK(run({"check-theorem", "--incline", (scratch() / "missing.json").string()}).status == 2);
}

TEST_CASE("order") {
  const std::string ones =
      write_file("ones.json", R"({"incline":{"kind":"boolean"},"n":3,"entries":[[1,1,1],[1,1,1],[1,1,1]]})");
  auto r = run({"order", "--matrix", ones});
  CHECK(r.status == 0);
  CHECK(r.out.find("order-index <= 1\n") != std::string::npos);
  CHECK(r.out.find("order-period <= 1\n") != std::string::npos);

  write_file("bool.json", R"({"kind":"boolean"})");
  const std::string cyc = write_file("cyc.json", R"({"incline":"bool.json","n":3,"entries":[[0,1,0],[0,0,1],[1,0,0]]})");
  r = run({"order", "--matrix", cyc, "--out", "-"});
  CHECK(r.status == 0);
  CHECK(r.out.find("order-period <= 3\n") != std::string::npos);
  const auto doc = Json::parse(r.out.substr(r.out.find('{')));
  CHECK(doc["index_bound"] == 1);
  CHECK(doc["period_bound"] == 3);
  CHECK(doc["witnesses"][0] == Json::array({1, 3}));

  const std::string trop = write_file(
      "trop.json", R"({"incline":{"kind":"tropical"},"n":3,"entries":[["1/2","inf",3],[0,"7/3","inf"],["inf",1,"inf"]]})");
  r = run({"order", "--matrix", trop});
  CHECK(r.status == 0);

  CHECK(run({"order", "--matrix", write_file("bad.json", "{not json")}).status == 2);
  CHECK(run({"order", "--matrix", write_file("ragged.json", R"({"incline":{"kind":"boolean"},"entries":[[1,0],[1]]})")})
            .status == 2);
  CHECK(run({"order", "--matrix", write_file("outside.json", R"({"incline":{"kind":"fuzzy","tnorm":"min"},"entries":[["3/2",0],[0,0]]})")})
            .status == 2);
  const std::string two = write_file("two.json", R"({"incline":{"kind":"boolean"},"n":2,"entries":[[0,1],[1,0]]})");
  CHECK(run({"order", "--matrix", two}).status == 2);
  r = run({"order", "--matrix", two, "--horizon", "2"});
  CHECK(r.status == 1);
  CHECK(r.out.find("order-period <= not found\n") != std::string::npos);
  CHECK(run({"order", "--matrix", two, "--horizon", "3"}).status == 0);
}

TEST_CASE("axioms") {
  auto r = run({"axioms", "--incline", "tropical"});
  CHECK(r.status == 0);
  CHECK(r.out.find("sampled triples = 10000\n") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"axioms", "--incline", kTwoChain});
  CHECK(r.status == 0);
  CHECK(r.out.find("triples = 8\n") != std::string::npos);

  const std::string broken = write_file(
      "broken.json", R"({"kind":"table","elements":["0","1"],"add":[[0,1],[1,1]],"mul":[[1,0],[0,1]]})");
  r = run({"axioms", "--incline", broken, "--out", "-"});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL absorption  absorption: 0 + 0·0 = 1 ≠ 0\n") != std::string::npos);

  CHECK(run({"axioms", "--incline", write_file("nokind.json", R"({"elements":[]})")}).status == 2);
}

TEST_CASE("powers") {
  const std::string swap = write_file("swap.json", R"({"incline":{"kind":"boolean"},"n":2,"entries":[[0,1],[1,0]]})");
  auto r = run({"powers", "--matrix", swap, "--power", "2", "--out", "-"});
  CHECK(r.status == 0);
  CHECK(r.out.find("A^2 =\n1 0\n0 1\n") == 0);
  const auto doc = Json::parse(r.out.substr(r.out.find('{')));
  CHECK(doc["entries"] == Json::parse("[[1,0],[0,1]]"));
  CHECK(run({"powers", "--matrix", swap, "--power", "0"}).status == 2);
}

TEST_CASE("reduce") {
  auto r = run({"reduce", "--walk", "1 2 3 1 2 3 1 2 3 1 2 3", "--short", "5", "--mode", "both"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 2 3 1 2 3 1 2 3 1 2 3 : 1 2 3 1 2 3\n");
  r = run({"reduce", "--walk", "1 2 2 1", "--short", "1"});
  CHECK(r.status == 1);
  CHECK(r.out == "1 2 2 1 : no reduction of length 1\n");
  CHECK(run({"reduce", "--walk", "1 9", "--n", "3"}).status == 2);
  CHECK(run({"reduce", "--walk", "1"}).status == 2);
}

TEST_CASE("identical flags give byte-identical JSON") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify-lemma", "--n", "3", "--long", "6", "--short", "3", "--mode", "both"},
      {"check-theorem", "--incline", "fuzzy-product", "--trials", "50", "--seed", "9"},
      {"axioms", "--incline", "fuzzy-lukasiewicz"},
      {"reduce", "--walk", "1 1 2 3 3 1"},
  };
  int i = 0;
  for (auto cmd : commands) {
    const std::string a = (scratch() / ("a" + std::to_string(i) + ".json")).string();
    const std::string b = (scratch() / ("b" + std::to_string(i) + ".json")).string();
    ++i;
    auto c1 = cmd;
    c1.insert(c1.end(), {"--out", a});
    auto c2 = cmd;
    c2.insert(c2.end(), {"--out", b});
    run(c1);
    run(c2);
    CHECK_FALSE(slurp(a).empty());
    CHECK(slurp(a) == slurp(b));
  }
}

TEST_CASE("json round trips preserve matrices and specs") {
  const auto spec = cli::resolve_incline(kTwoChain);
  CHECK(incline_spec_from_json(to_json(spec)) == spec);
  for (const char* name : {"boolean", "tropical", "fuzzy(min)", "fuzzy-product", "fuzzy-lukasiewicz"}) {
    const auto s = cli::resolve_incline(name);
    CHECK(incline_spec_from_json(to_json(s)) == s);
  }
  const auto doc = Json::parse(R"({"incline":{"kind":"tropical"},"n":2,"entries":[["1/2","inf"],[0,"6/4"]]})");
  const Matrix m = matrix_from_json(doc);
  CHECK(to_json(m)["entries"] == Json::parse(R"([["1/2","inf"],["0","3/2"]])"));
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"incline":{"kind":"boolean"},"n":3,"entries":[[1,0],[0,1]]})")),
                  InputError);

  const auto named = Json::parse(R"({"incline":"tropical","entries":[["1/2","inf"],[0,"6/4"]]})");
  CHECK(matrix_from_json(named) == m);
  CHECK(matrix_from_json(Json::parse(R"j({"incline":"fuzzy(product)","entries":[[1,0],[0,1]]})j")).incline().spec() ==
        InclineSpec::fuzzy(TNorm::product));
  CHECK_THROWS_AS(cli::resolve_incline("fuzzy-drastic"), InputError);
}
