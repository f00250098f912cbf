#pragma once

#include "synalg/automaton.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace synalg {

/// Regex syntax tree. Dialect: `∅` (or `#`) for the empty language, `()` for ε,
/// letters, `|`, juxtaposition, postfix `*`, parentheses.
struct Regex {
  enum class Kind { Empty, Epsilon, Literal, Union, Concat, Star };
  Kind kind = Kind::Epsilon;
  std::uint8_t letter = 0;
  std::vector<Regex> children;
};

/// Throws ParseError with a byte position, or InputError for letters outside the alphabet.
Regex parse_regex(std::string_view pattern, const Alphabet &alphabet);

/// Nondeterministic automaton with ε-moves. Used by the regex frontend and by reversal.
struct Nfa {
  std::size_t letters = 0;
  /// next[q][a] = successors of q on letter a
  std::vector<std::vector<std::vector<Elem>>> next;
  std::vector<std::vector<Elem>> epsilon;
  std::vector<Elem> initial;
  std::vector<bool> final;

  Elem add_state();
};

/// Thompson construction.
Nfa thompson(const Regex &r, std::size_t letters);

/// Subset construction, completed with a sink when needed; states numbered in BFS order.
DAutomaton determinize(const Nfa &nfa, const Alphabet &alphabet);

/// Complete DFA straight out of the subset construction, without minimization.
DAutomaton regex_to_dfa_raw(std::string_view pattern, const Alphabet &alphabet);

/// Complete minimal DFA for the pattern in canonical (shortlex BFS) state order.
DAutomaton regex_to_dfa(std::string_view pattern, const Alphabet &alphabet);

} // namespace synalg
