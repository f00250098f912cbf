#include "synalg/checks.hpp"
#include "synalg/error.hpp"
#include "synalg/minimize.hpp"

#include <catch_amalgamated.hpp>

using namespace synalg;

TEST_CASE("config validation") {
  CheckConfig ok;
  CHECK_NOTHROW(validate_config(ok));
  auto rejects = [](auto &&edit) {
    CheckConfig cfg;
    edit(cfg);
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  };
  rejects([](CheckConfig &c) { c.instance_count = 0; });
  rejects([](CheckConfig &c) { c.max_base_states = 0; });
  rejects([](CheckConfig &c) { c.max_base_states = 6; });
  rejects([](CheckConfig &c) { c.alphabet_size = 5; });
  rejects([](CheckConfig &c) { c.varieties.clear(); });
  rejects([](CheckConfig &c) { c.checks.clear(); });
  CHECK_THROWS_AS(run_checks(CheckConfig{.instance_count = 0}), ConfigError);
}

TEST_CASE("check names round-trip") {
  for (auto k : all_checks())
    CHECK(check_from_name(check_name(k)) == k);
  CHECK_THROWS_AS(check_from_name("nope"), ConfigError);
}

TEST_CASE("instances are deterministic and follow the config") {
  CheckConfig cfg;
  cfg.varieties = {VarietyTag::Set, VarietyTag::Semilattice};
  for (std::size_t i = 0; i < 20; ++i) {
    const DAutomaton x = check_instance(cfg, i);
    const DAutomaton y = check_instance(cfg, i);
    CHECK(x.delta == y.delta);
    CHECK(x.output == y.output);
    CHECK(x.variety.tag() == cfg.varieties[i % 2]);
    CHECK(x.alphabet.size() == 2);
    CHECK(validate_automaton(x).empty());
  }
  CheckConfig other = cfg;
  other.seed = 7;
  bool differs = false;
  for (std::size_t i = 0; i < 20; ++i)
    differs = differs || check_instance(cfg, i).delta != check_instance(other, i).delta;
  CHECK(differs);
}

TEST_CASE("default seed passes every check") {
  CheckConfig cfg;
  cfg.instance_count = 30;
  cfg.varieties = {VarietyTag::Set, VarietyTag::Pointed, VarietyTag::Involution,
                   VarietyTag::Semilattice, VarietyTag::Vect};
  const CheckReport r = run_checks(cfg);
  INFO(r.text());
  CHECK(r.ok());
  REQUIRE(r.outcomes.size() == all_checks().size());
  for (const auto &o : r.outcomes) {
    CHECK(o.run == 30);
    CHECK(o.passed + o.skipped == o.run);
  }
  CHECK(r.text() == run_checks(cfg).text());
}

TEST_CASE("individual checks accept valid automata") {
  const Alphabet ab = Alphabet::from_string("ab");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DAutomaton a = random_automaton(Variety::set(), 3, ab, seed);
    CHECK(check_tran_eq_oracle(a).empty());
    CHECK(check_universal_property(a).empty());
    CHECK(check_duality(a).empty());
    CHECK(check_minimize_idempotent(a).empty());
    CHECK(check_recognition(a).empty());
  }
}
