#pragma once

#include "synalg/automaton.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace synalg {

enum class CheckKind { TranEqOracle, UniversalProperty, Duality, MinimizeIdempotent, Recognition };

std::string check_name(CheckKind k);
/// Throws ConfigError on unknown names.
CheckKind check_from_name(const std::string &name);
std::vector<CheckKind> all_checks();

struct CheckConfig {
  std::uint64_t seed = 42;
  std::size_t instance_count = 100;
  /// Base DFA size cap for SET instances; lifted varieties use min(this, 3).
  std::size_t max_base_states = 5;
  std::size_t alphabet_size = 2;
  std::vector<VarietyTag> varieties{VarietyTag::Set};
  unsigned vect_prime = 2;
  std::vector<CheckKind> checks = all_checks();
  /// Failing instances are written here as replayable automaton files; empty disables dumps.
  std::string replay_dir;
};

/// Throws ConfigError unless instance_count >= 1, 1 <= max_base_states <= 5,
/// 1 <= alphabet_size <= 4, and varieties and checks are nonempty.
void validate_config(const CheckConfig &cfg);

struct CheckFailure {
  std::size_t instance = 0;
  std::string variety;
  std::string message;
  std::string replay_path;
  std::string automaton_json;
};

struct CheckOutcome {
  CheckKind check = CheckKind::TranEqOracle;
  std::size_t run = 0;
  std::size_t passed = 0;
  /// Instances where the check does not apply (duality on non-SET) or hit the size guard.
  std::size_t skipped = 0;
  std::vector<CheckFailure> failures;
};

struct CheckReport {
  std::vector<CheckOutcome> outcomes;

  bool ok() const;
  std::string text() const;
};

/// The i-th harness instance: variety round-robin over cfg.varieties, size and seed drawn
/// from a generator seeded with cfg.seed.
DAutomaton check_instance(const CheckConfig &cfg, std::size_t i);

/// Runs every selected check on every instance. Deterministic in the config.
CheckReport run_checks(const CheckConfig &cfg);

/// Individual property checks; each returns an empty string on success or a failure message.
std::string check_tran_eq_oracle(const DAutomaton &a);
std::string check_universal_property(const DAutomaton &a);
std::string check_duality(const DAutomaton &a);
std::string check_minimize_idempotent(const DAutomaton &a);
std::string check_recognition(const DAutomaton &a, std::size_t max_len = 4);

} // namespace synalg
