#include "synalg/error.hpp"
#include "synalg/variety.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace synalg;

namespace {

// Two-chain 0 < 1 as a join-semilattice with bottom 0.
FiniteDObject two_chain() {
  return tabulate(Variety::semilattice(), 2, Elem{0}, [](std::size_t, Elem x) { return x; },
                  [](Elem x, Elem y) { return std::max(x, y); });
}

FiniteDObject gf(unsigned p) {
  const Variety v = Variety::vect(p);
  return tabulate(v, p, Elem{0}, [&](std::size_t c, Elem x) { return static_cast<Elem>(c * x % p); },
                  [&](Elem x, Elem y) { return static_cast<Elem>((x + y) % p); });
}

} // namespace

TEST_CASE("variety names and primes") {
  CHECK(Variety::from_name("jsl") == Variety::semilattice());
  CHECK(Variety::from_name("semilattice") == Variety::semilattice());
  CHECK(Variety::from_name("vect", 5).prime() == 5);
  CHECK(Variety::vect(3).label() == "VECT(3)");
  CHECK_THROWS_AS(Variety::vect(4), InputError);
  CHECK_THROWS_AS(Variety::vect(37), InputError);
  CHECK_THROWS_AS(Variety::from_name("ring"), InputError);
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
    CHECK(Variety::vect(p).prime() == p);
}

TEST_CASE("output objects satisfy their laws") {
  for (auto v : {Variety::set(), Variety::pointed(), Variety::involution(), Variety::semilattice(),
                 Variety::vect(2), Variety::vect(3), Variety::vect(7)}) {
    const FiniteDObject y = v.output_object();
    CHECK(validate_object(y, v).empty());
    CHECK(y.size == (v.tag() == VarietyTag::Vect ? v.prime() : 2));
  }
  CHECK(Variety::involution().output_object().complement(0) == 1);
  CHECK(Variety::pointed().parse_output("bot") == Elem{0});
  CHECK(Variety::vect(5).parse_output("4") == Elem{4});
  CHECK_FALSE(Variety::vect(5).parse_output("5"));
  CHECK_FALSE(Variety::set().parse_output("2"));
  CHECK(Variety::pointed().format_output(0) == "bot");
}

TEST_CASE("GF(p) tables pass the module axioms") {
  for (unsigned p : {2u, 3u, 5u})
    CHECK(validate_object(gf(p), Variety::vect(p)).empty());
}

TEST_CASE("law scan reports planted defects") {
  SECTION("semilattice join not idempotent") {
    FiniteDObject bad = two_chain();
    bad.binary[3] = 0; // 1 ∨ 1 = 0
    CHECK_FALSE(validate_object(bad, Variety::semilattice()).empty());
  }
  SECTION("involution not self-inverse") {
    FiniteDObject bad = tabulate(Variety::involution(), 3, std::nullopt,
                                 [](std::size_t, Elem x) { return static_cast<Elem>((x + 1) % 3); },
                                 [](Elem, Elem) { return Elem{0}; });
    const auto v = validate_object(bad, Variety::involution());
    REQUIRE_FALSE(v.empty());
    CHECK(describe(v.front()).find("involution") != std::string::npos);
  }
  SECTION("vector space addition not commutative") {
    FiniteDObject bad = gf(3);
    bad.binary[1 * 3 + 2] = 1;
    CHECK_FALSE(validate_object(bad, Variety::vect(3)).empty());
  }
}

TEST_CASE("homomorphisms") {
  const FiniteDObject c = two_chain();
  CHECK(is_homomorphism({0, 1}, c, c, Variety::semilattice()));
  CHECK_FALSE(is_homomorphism({1, 1}, c, c, Variety::semilattice())); // bottom not preserved
  CHECK(homomorphism_defect({1, 0}, c, c).has_value());
  CHECK_THROWS_AS(is_homomorphism({0, 7}, c, c, Variety::semilattice()), InputError);
}

TEST_CASE("partitions") {
  const Partition p = Partition::from_labels({5, 3, 5, 9});
  CHECK(p.block_count() == 3);
  CHECK(p.block_of(0) == 0);
  CHECK(p.block_of(1) == 1);
  CHECK(p.block_of(2) == 0);
  CHECK(p.blocks()[0] == std::vector<Elem>{0, 2});
  CHECK(Partition::discrete(4).block_count() == 4);
  CHECK(Partition::total(4).block_count() == 1);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), InputError);
}

TEST_CASE("generated subalgebra of GF(3) from 1 is everything, from 0 only zero") {
  const FiniteDObject f = gf(3);
  auto all = generated_subalgebra(f, {1}, Variety::vect(3));
  CHECK(all.object.size == 3);
  CHECK(all.inclusion.front() == 0); // the constant comes first
  auto zero = generated_subalgebra(f, {0}, Variety::vect(3));
  CHECK(zero.object.size == 1);
  CHECK(validate_object(zero.object, Variety::vect(3)).empty());
}

TEST_CASE("subsets of a 2-element set: brute-force closure agrees") {
  // Powerset of {0,1} as bitmasks with union.
  const FiniteDObject pow = tabulate(Variety::semilattice(), 4, Elem{0},
                                     [](std::size_t, Elem x) { return x; },
                                     [](Elem x, Elem y) { return x | y; });
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      std::set<Elem> brute{0, a, b, static_cast<Elem>(a | b)};
      auto sub = generated_subalgebra(pow, {a, b}, Variety::semilattice());
      CHECK(sub.object.size == brute.size());
      CHECK(validate_object(sub.object, Variety::semilattice()).empty());
    }
}

TEST_CASE("quotients") {
  const FiniteDObject f = gf(3);
  CHECK_THROWS_AS(quotient_by_partition(f, Partition::from_labels({0, 0, 1}), Variety::vect(3)),
                  NotACongruence);
  auto q = quotient_by_partition(f, Partition::total(3), Variety::vect(3));
  CHECK(q.object.size == 1);
  const FiniteDObject pow = tabulate(Variety::semilattice(), 4, Elem{0},
                                     [](std::size_t, Elem x) { return x; },
                                     [](Elem x, Elem y) { return x | y; });
  // Identify subsets by whether they contain element 0: {∅,{1}} and {{0},{0,1}}.
  auto q2 = quotient_by_partition(pow, Partition::from_labels({0, 1, 0, 1}), Variety::semilattice());
  CHECK(q2.object.size == 2);
  CHECK(validate_object(q2.object, Variety::semilattice()).empty());
  CHECK(q2.projection == std::vector<Elem>{0, 1, 0, 1});
}

TEST_CASE("restrict_to rejects unclosed subsets") {
  CHECK_THROWS_AS(restrict_to(gf(3), {0, 1}), InputError);
  CHECK(restrict_to(gf(3), {0}).object.size == 1);
}
