#pragma once

#include "synalg/automaton.hpp"
#include "synalg/syntactic.hpp"

#include <string_view>
#include <vector>

namespace synalg {

/// A regular language held as its canonical minimal complete DFA (SET variety).
class RegularLanguageHandle {
public:
  RegularLanguageHandle() = default;
  /// Minimizes; throws VarietyMismatch unless the automaton is a SET automaton.
  static RegularLanguageHandle from_dfa(const DAutomaton &dfa);
  static RegularLanguageHandle from_regex(std::string_view pattern, const Alphabet &alphabet);

  const DAutomaton &dfa() const noexcept { return dfa_; }
  const Alphabet &alphabet() const noexcept { return dfa_.alphabet; }
  bool contains(const Word &w) const { return accepts(dfa_, w); }

  /// Canonical forms compare by table equality.
  friend bool operator==(const RegularLanguageHandle &a, const RegularLanguageHandle &b);

private:
  DAutomaton dfa_;
};

/// Minimal DFA of the reversed language.
RegularLanguageHandle reverse(const RegularLanguageHandle &l);

/// Every distinct u⁻¹Lv⁻¹, in discovery order (left derivative first, then right).
std::vector<RegularLanguageHandle> two_sided_derivatives(const RegularLanguageHandle &l);

/// Every distinct u⁻¹L.
std::vector<RegularLanguageHandle> left_derivatives(const RegularLanguageHandle &l);

struct Atom {
  /// membership[g] = whether the atom lies inside generator g
  std::vector<bool> membership;
  RegularLanguageHandle language;
};

struct LocalVariety {
  std::vector<RegularLanguageHandle> generators;
  /// Atoms in order of discovery along the product automaton; atom 0 contains ε.
  std::vector<Atom> atoms;
  /// Synchronized product of the generators' DFAs (reachable part).
  DAutomaton product_dfa;
  /// atom_of_state[s] = atom containing the words leading to product state s
  std::vector<std::size_t> atom_of_state;
};

/// Atoms of the boolean algebra generated by `gens` (all over one alphabet).
LocalVariety boolean_closure_atoms(const std::vector<RegularLanguageHandle> &gens);

struct DualAlgebra {
  Alphabet alphabet;
  std::size_t size = 0;
  std::size_t initial = 0;
  /// transitions[a][z] = the atom z' with z ⊆ a⁻¹z'
  std::vector<std::vector<Elem>> transitions;
  /// witnesses[z] = shortlex-least word reaching z from the initial atom
  std::vector<Word> witnesses;
  /// mult[z * size + z'] = state reached on witnesses[z] witnesses[z']
  std::vector<Elem> mult;
};

/// Throws NonFunctionalTransition when the generators are not derivative-closed, and
/// std::logic_error if the multiplication depends on the chosen witnesses.
DualAlgebra dual_algebra(const LocalVariety &v);

/// The dual algebra as an X-generated monoid with output "atom lies inside `accepting`".
RecognizingPair dual_pair(const DualAlgebra &d, const RegularLanguageHandle &l);

struct SyndualReport {
  bool isomorphic = false;
  LocalVariety variety;
  DualAlgebra algebra;
  RecognizingPair dual;
  SyntacticResult syntactic;
};

/// Dual of the smallest local variety containing L^rev versus T(Min L).
SyndualReport verify_syndual(const RegularLanguageHandle &l);

struct MindualReport {
  bool isomorphic = false;
  std::size_t atom_count = 0;
  std::size_t minimal_states = 0;
  DAutomaton dual_automaton;
};

/// Atoms of the left-derivative closure of L^rev, read as an automaton, versus Min L.
MindualReport verify_mindual(const RegularLanguageHandle &l);

} // namespace synalg
