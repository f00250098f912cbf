#pragma once

// Brute-force reference computations. These only read raw tables or a membership predicate
// and never call the library's minimization, monoid or duality code.

#include "synalg/automaton.hpp"

#include <functional>
#include <string>
#include <vector>

namespace oracle {

using Membership = std::function<bool(const std::string &)>;

/// Membership through std::regex (ECMAScript, anchored).
Membership regex_membership(const std::string &pattern);

/// Classical run over a raw transition table; letters[i] is the character of letter i.
Membership table_membership(const std::string &letters,
                            const std::vector<std::vector<synalg::Elem>> &delta,
                            synalg::Elem initial, const std::vector<bool> &final);

/// All words over `letters` of length <= max_len, shortest first.
std::vector<std::string> all_words(const std::string &letters, std::size_t max_len);

/// L(x u y) for a free element u under the variety's linear extension.
unsigned context_value(const synalg::FreeElement &u, const Membership &l,
                       const synalg::Alphabet &alphabet, const std::string &x,
                       const std::string &y);

/// Number of classes of `elements` under "same L(x u y) for all |x|, |y| <= ctx_len".
std::size_t context_classes(const std::vector<synalg::FreeElement> &elements, const Membership &l,
                            const synalg::Alphabet &alphabet, std::size_t ctx_len);

/// Same grouping, returned as a class label per element.
std::vector<std::size_t> context_labels(const std::vector<synalg::FreeElement> &elements,
                                        const Membership &l, const synalg::Alphabet &alphabet,
                                        std::size_t ctx_len);

/// Minimal state count: states reachable through letters and operations, grouped by the
/// outputs they produce on all words of length <= carrier size.
std::size_t min_states(const synalg::DAutomaton &a);

/// Size of the monoid of maps generated by `gens` under composition, identity included.
std::size_t map_closure_size(const std::vector<std::vector<synalg::Elem>> &gens);

/// Distinct two-sided quotients u⁻¹Lv⁻¹ for |u|, |v| <= deriv_len, told apart on words of
/// length <= sig_len.
std::size_t two_sided_quotient_count(const Membership &l, const std::string &letters,
                                     std::size_t deriv_len, std::size_t sig_len);

/// Partitions of the carrier, other than the discrete one, that are compatible with every
/// operation and transition and constant on outputs. Exhaustive; carriers up to 8.
std::size_t coarser_congruences(const synalg::DAutomaton &a);

/// Reverse a string.
std::string reversed(std::string s);

} // namespace oracle
