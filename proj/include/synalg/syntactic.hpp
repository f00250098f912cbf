#pragma once

#include "synalg/automaton.hpp"
#include "synalg/monoid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace synalg {

enum class SyntacticSource { TransitionOfMinimal, OracleQuotient, Dual };

std::string source_name(SyntacticSource s);

struct SyntacticResult {
  RecognizingPair pair;
  SyntacticSource source = SyntacticSource::TransitionOfMinimal;

  const FiniteDMonoid &syn() const noexcept { return pair.monoid; }
};

/// Closure of the identity and the δ_a under composition and the pointwise variety
/// operations, as a sub-monoid of [Q,Q]. Element 0 is the constant map when the variety has
/// one; the rest follow the name order. Throws SizeGuardExceeded past the carrier cap.
RecognizingPair transition_monoid(const DAutomaton &a);

/// T(Min A).
SyntacticResult syntactic_monoid(const DAutomaton &a);

/// Context-based syntactic congruence on the minimal automaton. Never builds a transition
/// monoid: two free elements are equivalent iff every word-reachable left state and every
/// right word shorter than |Min A| observe the same output.
class SyntacticOracle {
public:
  explicit SyntacticOracle(const DAutomaton &a);

  /// Context signature of u; equal keys iff syntactically equivalent.
  std::vector<std::size_t> key(const FreeElement &u) const;
  bool equivalent(const FreeElement &u, const FreeElement &w) const;

  const DAutomaton &minimal() const noexcept { return min_; }
  std::size_t left_context_count() const noexcept { return left_.size(); }
  std::size_t right_context_count() const noexcept { return right_count_; }

private:
  DAutomaton min_;
  std::vector<Elem> left_;
  std::size_t right_count_ = 0;
  /// signature id of each state of min_ under the right contexts
  std::vector<std::size_t> signature_;
};

/// Throws VarietyMismatch when u, w or A disagree on the variety.
bool syntactic_equivalent(const DAutomaton &a, const FreeElement &u, const FreeElement &w);

struct OraclePartition {
  std::vector<FreeElement> elements;
  /// Blocks of element indices, numbered by least index.
  Partition partition;
};

/// Groups fm_enumerate(variety, alphabet, max_len) by the oracle. max_len must be <= 6.
OraclePartition syntactic_partition_oracle(const DAutomaton &a, std::size_t max_len);

/// Syn L saturated from the oracle alone: starting at ε (and the constant), classes are closed
/// under right multiplication by letters and the free variety operations, and every table is
/// read off class representatives.
SyntacticResult syntactic_quotient_oracle(const DAutomaton &a);

struct Factorization {
  /// h(m) = e_L(name(m)), present only when every check passed.
  std::optional<std::vector<Elem>> h;
  bool surjective = false;
  std::string counterexample;
};

/// Tests the universal property: pair factors through syn via h with h∘e = e_L.
Factorization factor_through(const RecognizingPair &pair, const SyntacticResult &syn);

} // namespace synalg
