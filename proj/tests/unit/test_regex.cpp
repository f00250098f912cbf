#include "synalg/error.hpp"
#include "synalg/regex.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace synalg;

namespace {

const Alphabet ab = Alphabet::from_string("ab");

std::string random_regex(std::mt19937 &rng, int depth) {
  const int pick = depth <= 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 7);
  switch (pick) {
  case 0:
    return "a";
  case 1:
    return "b";
  case 2:
    return "()";
  case 3:
    return "(" + random_regex(rng, depth - 1) + "|" + random_regex(rng, depth - 1) + ")";
  case 4:
  case 5:
    return random_regex(rng, depth - 1) + random_regex(rng, depth - 1);
  default:
    return "(" + random_regex(rng, depth - 1) + ")*";
  }
}

void agrees_with_std_regex(const std::string &pattern) {
  const DAutomaton d = regex_to_dfa(pattern, ab);
  const DAutomaton raw = regex_to_dfa_raw(pattern, ab);
  const auto member = oracle::regex_membership(pattern);
  for (const auto &w : oracle::all_words("ab", 6)) {
    INFO(pattern << " on " << w);
    REQUIRE(accepts(d, ab.parse_word(w)) == member(w));
    REQUIRE(accepts(raw, ab.parse_word(w)) == member(w));
  }
}

} // namespace

TEST_CASE("(ab)* gives the 3-state DFA") {
  const DAutomaton d = regex_to_dfa("(ab)*", ab);
  CHECK(d.size() == 3);
  CHECK(d.output[d.initial] == 1);
  CHECK(run(d, std::string_view("aa")) == run(d, std::string_view("b")));
  CHECK(regex_to_dfa_raw("(ab)*", ab).size() >= 3);
  CHECK(oracle::min_states(regex_to_dfa_raw("(ab)*", ab)) == 3);
}

TEST_CASE("empty language and empty word") {
  for (const char *empty : {"#", "\xE2\x88\x85"}) {
    const DAutomaton d = regex_to_dfa(empty, ab);
    CHECK(d.size() == 1);
    CHECK(d.output[0] == 0);
  }
  const DAutomaton eps = regex_to_dfa("()", ab);
  CHECK(eps.size() == 2);
  CHECK(accepts(eps, Word{}));
  CHECK_FALSE(accepts(eps, Word{0}));
}

TEST_CASE("a|b accepts exactly the one-letter words") {
  const DAutomaton d = regex_to_dfa("a|b", ab);
  for (const auto &w : oracle::all_words("ab", 3))
    CHECK(accepts(d, ab.parse_word(w)) == (w.size() == 1));
}

TEST_CASE("spaces are ignored") {
  const DAutomaton x = regex_to_dfa("( a b ) *", ab);
  const DAutomaton y = regex_to_dfa("(ab)*", ab);
  CHECK(x.delta == y.delta);
  CHECK(x.output == y.output);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const std::string &pattern) -> std::size_t {
    try {
      (void)parse_regex(pattern, ab);
    } catch (const ParseError &e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("(ab") == 0);
  CHECK(position_of("ab)") == 2);
  CHECK(position_of("*a") == 0);
  CHECK(position_of("ac") == 1);
  CHECK(position_of("a|(b|c)") == 5);
}

TEST_CASE("random regexes agree with std::regex") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 150; ++i)
    agrees_with_std_regex(random_regex(rng, 4));
  agrees_with_std_regex("(b|ab*a)*");
  agrees_with_std_regex("a(a|b)*b");
}

TEST_CASE("determinize handles a reversed NFA") {
  // NFA for words ending in a: 0 -a,b-> 0, 0 -a-> 1 (final)
  Nfa n;
  n.letters = 2;
  n.add_state();
  n.add_state();
  n.next[0][0] = {0, 1};
  n.next[0][1] = {0};
  n.initial = {0};
  n.final[1] = true;
  const DAutomaton d = determinize(n, ab);
  CHECK(validate_automaton(d).empty());
  for (const auto &w : oracle::all_words("ab", 5))
    CHECK(accepts(d, ab.parse_word(w)) == (!w.empty() && w.back() == 'a'));
}
