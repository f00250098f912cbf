#pragma once

#include "synalg/automaton.hpp"

#include <optional>
#include <vector>

namespace synalg {

struct ReachablePart {
  DAutomaton automaton;
  /// inclusion[i] = id in the original automaton of reachable state i
  std::vector<Elem> inclusion;
};

/// Word-reachable states, closed under the variety operations (the image of e_Q).
/// States are numbered: constant (if any), word-reachable states in shortlex order of their
/// least reaching word, then operation-generated states in discovery order.
ReachablePart reachable_part(const DAutomaton &a);

/// Kernel of the observation map: coarsest refinement of the output partition stable under
/// every letter (Moore refinement).
Partition observability_partition(const DAutomaton &a);

struct MinimizationReport {
  std::size_t reachable_size = 0;
  std::size_t minimal_size = 0;
  /// Partition of the reachable part's states into minimal states.
  Partition partition;
  /// projection[x] = minimal state of reachable state x
  std::vector<Elem> projection;
  /// For each minimal state, the least free element reaching it.
  std::vector<FreeElement> witnesses;
};

struct Minimized {
  DAutomaton automaton;
  MinimizationReport report;
};

/// Reachable part modulo observability, in canonical state order.
Minimized minimize(const DAutomaton &a);

/// Witness of each state in canonical order, or nullopt for states outside the reachable part.
std::vector<std::optional<FreeElement>> state_witnesses(const DAutomaton &a);

/// State bijection b_state = map[a_state] preserving every table, if the automata are
/// isomorphic. Reachable automata are compared through their canonical forms; others fall
/// back to a propagating search.
std::optional<std::vector<Elem>> automaton_iso(const DAutomaton &a, const DAutomaton &b);

} // namespace synalg
