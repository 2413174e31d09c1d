#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "kuforge/milnor.hpp"

using kuforge::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Values of one column of a TSV table, in row order.
std::vector<std::string> tsv_column(const std::string& text, const std::string& table, const std::string& column) {
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  int col = -1;
  std::vector<std::string> values;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      inside = line.substr(2) == table;
      col = -1;
      continue;
    }
    if (!inside || line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, '\t');) cells.push_back(c);
    if (col < 0) {
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k] == column) col = static_cast<int>(k);
      continue;
    }
    values.push_back(cells.at(static_cast<std::size_t>(col)));
  }
  return values;
}

}  // namespace

TEST_CASE("dims of Ltilde in rank two") {
  const auto r = invoke({"dims", "--functor", "Ltilde", "--rank", "2", "--max-degree", "5"});
  CHECK(r.code == 0);
  CHECK(tsv_column(r.out, "Ltilde", "dim") == std::vector<std::string>{"1", "0", "2", "0", "3", "0"});
  CHECK(tsv_column(r.out, "Ltilde", "degree") == std::vector<std::string>{"0", "1", "2", "3", "4", "5"});
}

TEST_CASE("ku-hom in rank one shows Z/2^d in degree 2d-1") {
  const auto r = invoke({"ku-hom", "--rank", "1", "--max-degree", "9"});
  CHECK(r.code == 0);
  const auto cot = tsv_column(r.out, "ku_hom", "cotorsion");
  REQUIRE(cot.size() == 10);
  for (int d = 1; d <= 5; ++d) CHECK(cot[static_cast<std::size_t>(2 * d - 1)] == "Z/" + std::to_string(1 << d));
}

TEST_CASE("verify milnor in rank two passes") {
  const auto r = invoke({"verify", "--suite", "milnor", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS criterion 1 [milnor]", 0) == 0);
}

TEST_CASE("json output follows the schema") {
  const auto r = invoke({"dims", "--functor", "Lfrak", "--index", "1", "--rank", "3", "--max-degree", "6", "--format",
                         "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["subcommand"] == "dims");
  CHECK(j["rank"] == 3);
  CHECK(j["max_degree"] == 6);
  const auto& rows = j["tables"]["Lfrak"];
  REQUIRE(rows.size() == 7);
  for (int b = 0; b <= 6; ++b) {
    CHECK(rows[static_cast<std::size_t>(b)]["degree"] == b);
    CHECK(rows[static_cast<std::size_t>(b)].begin().key() == "degree");
  }
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"dims", "--rank", "3", "--max-degree", "8", "--jobs", "3"},
           {"groupring", "--rank", "2", "--max-degree", "5", "--format", "json"},
           {"ku-cohom", "--rank", "3", "--max-degree", "10"},
           {"localcoh", "--module", "Lfrak(2,1)", "--route", "both", "--max-degree", "6", "--integral"},
           {"ss", "--rank", "2", "--max-degree", "6", "--format", "json"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    CAPTURE(args.front());
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("parallel rows match serial rows") {
  const auto serial = invoke({"dims", "--rank", "3", "--max-degree", "10"});
  const auto parallel = invoke({"dims", "--rank", "3", "--max-degree", "10", "--jobs", "4"});
  CHECK(serial.out == parallel.out);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"dims", "--functor", "X"}).code == 2);
  CHECK(invoke({"dims", "--rank", "-1"}).code == 2);
  CHECK(invoke({"dims", "--format", "xml"}).code == 2);
  CHECK(invoke({"dims", "--functor", "S", "--index", "1"}).code == 2);
  CHECK(invoke({"ss", "--rank", "1"}).code == 2);
  CHECK(invoke({"groupring", "--rank", "0"}).code == 2);
  CHECK(invoke({"localcoh", "--module", "Nothing(2)"}).code == 2);
  CHECK(invoke({"verify", "--suite", "no-such-suite"}).code == 2);
  CHECK(invoke({"verify", "--suite", "milnor", "--rank", "9"}).code == 2);
  CHECK(invoke({"dims", "--help"}).code == 0);
}

TEST_CASE("verify lists suites") {
  const auto r = invoke({"verify", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ss\tcriterion 8") != std::string::npos);
}

TEST_CASE("environment bound overrides the default only") {
  ::setenv("KUFORGE_DEGREE_BOUND", "3", 1);
  auto r = invoke({"dims", "--functor", "S"});
  CHECK(tsv_column(r.out, "S", "degree").size() == 4);
  r = invoke({"dims", "--functor", "S", "--max-degree", "5"});
  CHECK(tsv_column(r.out, "S", "degree").size() == 6);
  ::setenv("KUFORGE_DEGREE_BOUND", "many", 1);
  CHECK(invoke({"dims"}).code == 2);
  ::unsetenv("KUFORGE_DEGREE_BOUND");
  r = invoke({"dims", "--functor", "S"});
  CHECK(tsv_column(r.out, "S", "degree").size() == 17);
}

TEST_CASE("out writes to a file") {
  const std::string path = std::string(KUFORGE_SCRATCH_DIR) + "/cli_out.tsv";
  const auto r = invoke({"dims", "--functor", "K", "--rank", "2", "--max-degree", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto dims = tsv_column(text.str(), "K", "dim");
  REQUIRE(dims.size() == 5);
  for (int n = 0; n <= 4; ++n) CHECK(dims[static_cast<std::size_t>(n)] == std::to_string(kuforge::milnor::k_dim(2, n)));
  CHECK(invoke({"dims", "--out", "/nonexistent-dir/x.tsv"}).code == 2);
}

TEST_CASE("localcoh reports non-stabilization with exit code 3") {
  const auto r = invoke({"localcoh", "--module", "Lfrak(2,1)", "--max-degree", "12", "--max-level", "0"});
  CHECK(r.code == 3);
  CHECK(r.err.find("error:") == 0);
  CHECK(invoke({"localcoh", "--module", "Lfrak(2,1)", "--max-degree", "12"}).code == 0);
}
