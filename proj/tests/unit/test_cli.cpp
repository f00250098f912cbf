#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const fs::path dir = SYNALG_SCRATCH;
  fs::create_directories(dir);
  return dir;
}

std::string fixture(const std::string &name) { return std::string(SYNALG_FIXTURES) + "/" + name; }

Result run(const std::string &args, const std::string &env = "") {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = env + " '" + std::string(SYNALG_CLI) + "' " + args + " >'" + out.string() +
                          "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

} // namespace

TEST_CASE("minimize writes the minimal automaton and a report") {
  const fs::path min = scratch() / "min.json";
  const fs::path report = scratch() / "report.json";
  const Result r = run("minimize -i '" + fixture("ab_star.json") + "' -o '" + min.string() +
                       "' --report '" + report.string() + "'");
  REQUIRE(r.code == 0);
  const auto a = nlohmann::json::parse(slurp(min));
  CHECK(a["states"].size() == 3);
  CHECK(nlohmann::json::parse(slurp(report))["minimal_size"] == 3);
  // the output parses back and is already minimal
  const Result again = run("minimize -i '" + min.string() + "'");
  REQUIRE(again.code == 0);
  CHECK(nlohmann::json::parse(again.out)["states"].size() == 3);
}

TEST_CASE("synmon and transmon") {
  const Result syn = run("synmon -i '" + fixture("ab_star.json") + "' --out json");
  REQUIRE(syn.code == 0);
  const auto j = nlohmann::json::parse(syn.out);
  CHECK(j["size"] == 6);
  CHECK(j["laws"]["ok"] == true);
  const Result tran = run("transmon -i '" + fixture("ab_star.json") + "' --out json");
  REQUIRE(tran.code == 0);
  CHECK(nlohmann::json::parse(tran.out)["size"] >= 6);
  const Result table = run("synmon --regex '(b|ab*a)*' --alphabet ab");
  REQUIRE(table.code == 0);
  CHECK(table.out.find("laws: ok") != std::string::npos);
}

TEST_CASE("lift, oracle and dualize") {
  const fs::path lifted = scratch() / "parity_jsl.json";
  REQUIRE(run("lift -i '" + fixture("two_state.json") + "' --to jsl -o '" + lifted.string() + "'").code == 0);
  const Result syn = run("synmon -i '" + lifted.string() + "' --out json");
  REQUIRE(syn.code == 0);
  CHECK(nlohmann::json::parse(syn.out)["size"] == 4);
  const Result vect = run("lift -i '" + fixture("two_state.json") + "' --to vect -p 3");
  CHECK(vect.code == 0);
  const Result oracle = run("oracle -i '" + fixture("ab_star.json") + "' --maxlen 4");
  REQUIRE(oracle.code == 0);
  CHECK(oracle.out.find("classes: 6") != std::string::npos);
  const fs::path atoms = scratch() / "atoms";
  fs::remove_all(atoms);
  const Result dual = run("dualize --regex '(ab)*' --alphabet ab --atoms-dir '" + atoms.string() + "'");
  REQUIRE(dual.code == 0);
  CHECK(std::distance(fs::directory_iterator(atoms), fs::directory_iterator()) == 6);
}

TEST_CASE("check subcommand") {
  const Result r = run("check --seed 42 --instances 10 --varieties set jsl");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
  SECTION("validation and schema errors exit 2") {
    CHECK(run("minimize -i '" + fixture("unknown_field.json") + "'").code == 2);
    CHECK(run("minimize -i '" + fixture("jsl_bad_output.json") + "'").code == 2);
    CHECK(run("minimize -i '" + fixture("missing.json") + "'").code == 2);
    const Result bad_regex = run("synmon --regex '(ab' --alphabet ab");
    CHECK(bad_regex.code == 2);
    CHECK_FALSE(bad_regex.err.empty());
    CHECK(run("dualize -i '" + fixture("two_state.json") + "'").code == 0);
  }
  SECTION("size guard exits 3") {
    CHECK(run("synmon --regex '(ab)*' --alphabet ab", "SYNALG_SIZE_GUARD=4").code == 3);
    CHECK(run("synmon --regex '(ab)*' --alphabet ab", "SYNALG_SIZE_GUARD=100").code == 0);
  }
  SECTION("usage errors exit 4") {
    CHECK(run("").code == 4);
    CHECK(run("frobnicate").code == 4);
    CHECK(run("lift -i '" + fixture("two_state.json") + "'").code == 4);
    CHECK(run("lift -i '" + fixture("two_state.json") + "' --to group").code == 4);
    CHECK(run("synmon").code == 4);
    CHECK(run("synmon -i x.json --regex a").code == 4);
    CHECK(run("oracle --regex a --maxlen 9").code == 4);
    CHECK(run("check --instances 0").code == 4);
    CHECK(run("check --checks nope").code == 4);
  }
  SECTION("help exits 0") { CHECK(run("--help").code == 0); }
}
