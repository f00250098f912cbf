#include "synalg/automaton.hpp"
#include "synalg/error.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace synalg;

namespace {

const Alphabet ab = Alphabet::from_string("ab");
const Alphabet a1 = Alphabet::from_string("a");

// (ab)*: 0 initial/final, 1 after a, 2 sink.
DAutomaton ab_star() { return make_dfa(ab, {{1, 2, 2}, {2, 0, 2}}, 0, {true, false, false}); }

// {ab}: 0 -a-> 1 -b-> 2 (final), 3 sink.
DAutomaton only_ab() {
  return make_dfa(ab, {{1, 3, 3, 3}, {3, 2, 3, 3}}, 0, {false, false, true, false});
}

DAutomaton parity() { return make_dfa(a1, {{1, 0}}, 0, {true, false}); }

} // namespace

TEST_CASE("classical DFA encodes as a valid SET automaton") {
  CHECK(validate_automaton(ab_star()).empty());
  CHECK(validate_automaton(parity()).empty());
}

TEST_CASE("run on (ab)*") {
  const DAutomaton a = ab_star();
  CHECK(run(a, Word{}) == a.initial);
  CHECK(run(a, std::string_view("ab")) == 0);
  CHECK(run(a, std::string_view("aa")) == 2);
  CHECK_THROWS_AS(run(a, std::string_view("ac")), InputError);
  // Compositionality on all short words.
  const auto words = words_up_to(2, 3);
  for (const auto &u : words)
    for (const auto &w : words) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      REQUIRE(run(a, uw) == run_from(a, run(a, u), w));
    }
}

TEST_CASE("planted validation failures") {
  SECTION("semilattice output not join-preserving") {
    DAutomaton a;
    a.variety = Variety::semilattice();
    a.alphabet = a1;
    a.states = tabulate(Variety::semilattice(), 4, Elem{0}, [](std::size_t, Elem x) { return x; },
                        [](Elem x, Elem y) { return x | y; });
    a.delta = {{0, 1, 2, 3}};
    a.initial = 1;
    a.output = {0, 1, 1, 0};
    const auto v = validate_automaton(a);
    REQUIRE_FALSE(v.empty());
    CHECK(describe(v.front()).find("prime upset") != std::string::npos);
    CHECK_THROWS_AS(require_valid(a), ValidationError);
  }
  SECTION("pointed transition moves the basepoint") {
    DAutomaton a;
    a.variety = Variety::pointed();
    a.alphabet = a1;
    a.states.variety = Variety::pointed();
    a.states.size = 2;
    a.states.constant = 0;
    a.delta = {{1, 1}};
    a.initial = 1;
    a.output = {0, 1};
    const auto v = validate_automaton(a);
    REQUIRE_FALSE(v.empty());
    CHECK(describe(v.front()).find("basepoint not preserved") != std::string::npos);
  }
  SECTION("output outside Y") {
    DAutomaton a = parity();
    a.output[1] = 2;
    CHECK_FALSE(validate_automaton(a).empty());
  }
}

TEST_CASE("eval on lifted languages") {
  SECTION("semilattice: L(U) = 1 iff U meets L0") {
    const DAutomaton j = lift_automaton(only_ab(), Variety::semilattice());
    const auto v = Variety::semilattice();
    CHECK(eval(j, parse_free("{ab,b}", ab, v)) == 1);
    CHECK(eval(j, parse_free("{a,b}", ab, v)) == 0);
    CHECK(eval(j, fm_constant(v)) == 0);
  }
  SECTION("involution: L(!w) = 1 iff w not in L0") {
    const DAutomaton i = lift_automaton(only_ab(), Variety::involution());
    const auto v = Variety::involution();
    CHECK(eval(i, parse_free("!ab", ab, v)) == 0);
    CHECK(eval(i, parse_free("!ba", ab, v)) == 1);
    CHECK(eval(i, parse_free("ab", ab, v)) == 1);
  }
  SECTION("vect(2): linear extension of parity") {
    const DAutomaton l = lift_automaton(parity(), Variety::vect(2));
    const auto v = Variety::vect(2);
    CHECK(eval(l, parse_free("_ + a", a1, v)) == 1);
    CHECK(eval(l, parse_free("_ + aa", a1, v)) == 0);
  }
}

TEST_CASE("lifts: sizes, validity and agreement with the classical language") {
  struct Case {
    Variety v;
    std::size_t size;
  };
  const DAutomaton base = ab_star();
  const auto member = oracle::regex_membership("(ab)*");
  for (const auto &c : {Case{Variety::pointed(), 4}, Case{Variety::involution(), 6},
                        Case{Variety::semilattice(), 8}, Case{Variety::vect(2), 8},
                        Case{Variety::vect(3), 27}}) {
    const DAutomaton l = lift_automaton(base, c.v);
    CHECK(l.size() == c.size);
    CHECK(validate_automaton(l).empty());
    for (const auto &w : oracle::all_words("ab", 6))
      REQUIRE(eval(l, fm_embed_word(w, ab, c.v)) == (member(w) ? 1u : 0u));
  }
  const DAutomaton inv = lift_automaton(parity(), Variety::involution());
  CHECK(inv.size() == 4);
  // complementary transitions: δ(q̃) = δ(q)~
  for (Elem q = 0; q < 4; ++q)
    CHECK(inv.delta[0][inv.states.complement(q)] == inv.states.complement(inv.delta[0][q]));
  CHECK(lift_automaton(base, Variety::set()).delta == base.delta);
  CHECK_THROWS_AS(lift_automaton(inv, Variety::semilattice()), VarietyMismatch);
}

TEST_CASE("lift size guard") {
  const DAutomaton big = make_dfa(ab, {{1, 2, 3, 4, 5, 6, 7, 8, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}}, 0,
                                  std::vector<bool>(9, true));
  CHECK_THROWS_AS(lift_automaton(big, Variety::vect(3)), SizeGuardExceeded);
}

TEST_CASE("derived automaton of Z2 is the parity DFA") {
  FiniteDMonoid z2;
  z2.carrier = FiniteDObject::set_of(2);
  z2.mult = {0, 1, 1, 0};
  z2.unit = 0;
  z2.names = {fm_unit(Variety::set()), fm_embed_word("a", a1, Variety::set())};
  const DAutomaton d = derived_automaton(z2, a1, {1}, {1, 0});
  CHECK(d.size() == 2);
  for (const auto &w : oracle::all_words("a", 6))
    CHECK(accepts(d, a1.parse_word(w)) == (w.size() % 2 == 0));
  CHECK_THROWS_AS(derived_automaton(z2, a1, {1}, {1, 2}), InputError);
}

TEST_CASE("random automata are deterministic and valid") {
  const auto x = random_automaton(Variety::set(), 3, ab, 7);
  const auto y = random_automaton(Variety::set(), 3, ab, 7);
  CHECK(x.delta == y.delta);
  CHECK(x.output == y.output);
  CHECK(x.initial == y.initial);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (auto v : {Variety::set(), Variety::pointed(), Variety::involution(), Variety::semilattice(),
                   Variety::vect(2)})
      REQUIRE(validate_automaton(random_automaton(v, 2, a1, seed)).empty());
  // one-state automata over {a}: exactly the two possible DFAs
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto one = random_automaton(Variety::set(), 1, a1, seed);
    CHECK(one.size() == 1);
    CHECK(one.delta[0][0] == 0);
  }
}

TEST_CASE("permuting states keeps the language") {
  const DAutomaton a = lift_automaton(ab_star(), Variety::semilattice());
  std::vector<Elem> perm(a.size());
  for (Elem q = 0; q < a.size(); ++q)
    perm[q] = static_cast<Elem>((q + 3) % a.size());
  const DAutomaton b = permute_states(a, perm);
  CHECK(validate_automaton(b).empty());
  for (const auto &u : fm_enumerate(a.variety, ab, 2))
    REQUIRE(eval(a, u) == eval(b, u));
}
