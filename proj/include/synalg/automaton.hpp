#pragma once

#include "synalg/free_monoid.hpp"
#include "synalg/monoid.hpp"
#include "synalg/variety.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace synalg {

/// A finite deterministic automaton whose state set is an algebra of the variety:
/// every transition δ_a is an endomorphism of the states, and the output map is a
/// morphism into the variety's fixed output object Y.
struct DAutomaton {
  Variety variety = Variety::set();
  Alphabet alphabet;
  FiniteDObject states;
  /// delta[a][q] = δ_a(q)
  std::vector<std::vector<Elem>> delta;
  Elem initial = 0;
  /// output[q] is an element of variety.output_object()
  std::vector<Elem> output;
  /// Optional display names; empty or one per state.
  std::vector<std::string> state_names;

  std::size_t size() const noexcept { return states.size; }
  std::string state_name(Elem q) const {
    return q < state_names.size() ? state_names[q] : "q" + std::to_string(q);
  }
};

std::vector<Violation> validate_automaton(const DAutomaton &a);

/// Throws ValidationError listing every violation.
void require_valid(const DAutomaton &a);

/// Classical word run from `from` (defaults to the initial state).
Elem run(const DAutomaton &a, const Word &w);
Elem run_from(const DAutomaton &a, Elem from, const Word &w);
/// Letters by character; throws InputError on unknown letters.
Elem run(const DAutomaton &a, std::string_view word);

/// δ_u(from): the action of a free element, extended along the variety operations.
Elem act(const DAutomaton &a, Elem from, const FreeElement &u);

/// L_A(u) = f(δ_u(initial)).
Elem eval(const DAutomaton &a, const FreeElement &u);

/// States = monoid carrier, δ_a = right multiplication by gen[a], initial = unit, output = f.
/// Throws InputError if f is not a morphism into Y.
DAutomaton derived_automaton(const FiniteDMonoid &m, const Alphabet &alphabet,
                             const std::vector<Elem> &gen, const std::vector<Elem> &f);

/// Free construction on the state set of a classical automaton:
/// POINTED Q+⊥, INVOLUTION Q+Q̃, SEMILATTICE all subsets of Q, VECT(p) GF(p)^Q.
/// Throws SizeGuardExceeded when the lifted carrier is too large.
DAutomaton lift_automaton(const DAutomaton &classical, const Variety &target);

/// Uniformly random complete DFA on n states (about half final), lifted to `v`.
/// Deterministic in the seed.
DAutomaton random_automaton(const Variety &v, std::size_t n_base_states, const Alphabet &alphabet,
                            std::uint64_t seed);

/// Builds a SET automaton from a transition table and final-state set.
DAutomaton make_dfa(const Alphabet &alphabet, const std::vector<std::vector<Elem>> &delta,
                    Elem initial, const std::vector<bool> &final);

/// Consistently renames states: new id of old state q is perm[q]. Keeps POINTED basepoint
/// rules to the caller.
DAutomaton permute_states(const DAutomaton &a, const std::vector<Elem> &perm);

/// Classical membership for SET automata: output == 1.
bool accepts(const DAutomaton &a, const Word &w);

} // namespace synalg
