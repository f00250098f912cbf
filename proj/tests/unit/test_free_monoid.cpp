#include "synalg/error.hpp"
#include "synalg/free_monoid.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace synalg;

namespace {

const Alphabet ab = Alphabet::from_string("ab");

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i)
    r = r * (n - i) / (i + 1);
  return r;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--)
    r *= b;
  return r;
}

} // namespace

TEST_CASE("alphabet and words") {
  CHECK(ab.size() == 2);
  CHECK(ab.index_of('b') == 1);
  CHECK(ab.index_of('c') == -1);
  CHECK(ab.parse_word("abba") == Word{0, 1, 1, 0});
  CHECK(ab.parse_word("_").empty());
  CHECK(ab.format(Word{}) == "ε");
  CHECK_THROWS_AS(ab.parse_word("abc"), InputError);
  CHECK_THROWS_AS(Alphabet::from_string("aa"), InputError);
  CHECK_THROWS_AS(Alphabet::from_string(""), InputError);
  CHECK_THROWS_AS(Alphabet::from_string("a*"), InputError);
}

TEST_CASE("shortlex enumeration") {
  const auto w = words_up_to(2, 3);
  CHECK(w.size() == 15);
  CHECK(std::is_sorted(w.begin(), w.end(), shortlex_less));
  CHECK(w[1] == Word{0});
  CHECK(w[3] == Word{0, 0});
  CHECK(shortlex_less(Word{1}, Word{0, 0}));
  CHECK_FALSE(shortlex_less(Word{0, 1}, Word{0, 1}));
}

TEST_CASE("fm_enumerate sizes match closed-form counts") {
  const std::size_t words = 7; // words over {a,b} of length <= 2
  CHECK(fm_enumerate(Variety::set(), ab, 2).size() == words);
  CHECK(fm_enumerate(Variety::pointed(), ab, 2).size() == words + 1);
  CHECK(fm_enumerate(Variety::involution(), ab, 2).size() == 2 * words);
  CHECK(fm_enumerate(Variety::semilattice(), ab, 2).size() ==
        1 + choose(words, 1) + choose(words, 2) + choose(words, 3));
  for (unsigned p : {2u, 3u}) {
    const std::size_t expected = 1 + choose(words, 1) * (p - 1) + choose(words, 2) * ipow(p - 1, 2) +
                                 choose(words, 3) * ipow(p - 1, 3);
    CHECK(fm_enumerate(Variety::vect(p), ab, 2).size() == expected);
  }
}

TEST_CASE("fm_enumerate has no duplicates") {
  for (auto v : {Variety::set(), Variety::pointed(), Variety::involution(), Variety::semilattice(),
                 Variety::vect(3)}) {
    const auto all = fm_enumerate(v, ab, 2);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        REQUIRE_FALSE(all[i] == all[j]);
  }
}

TEST_CASE("free monoid is a monoid in every variety") {
  for (auto v : {Variety::set(), Variety::pointed(), Variety::involution(), Variety::semilattice(),
                 Variety::vect(2), Variety::vect(3)}) {
    const auto all = fm_enumerate(v, ab, 1);
    const auto one = fm_unit(v);
    for (const auto &x : all) {
      CHECK(fm_multiply(one, x, v) == x);
      CHECK(fm_multiply(x, one, v) == x);
      for (const auto &y : all)
        for (const auto &z : all)
          REQUIRE(fm_multiply(fm_multiply(x, y, v), z, v) == fm_multiply(x, fm_multiply(y, z, v), v));
    }
  }
}

TEST_CASE("variety-specific laws of the free monoid") {
  SECTION("pointed: bot is a zero") {
    const auto v = Variety::pointed();
    for (const auto &x : fm_enumerate(v, ab, 2)) {
      CHECK(fm_multiply(x, fm_constant(v), v).is_constant());
      CHECK(fm_multiply(fm_constant(v), x, v).is_constant());
    }
  }
  SECTION("involution: x·!y = !x·y = !(x·y)") {
    const auto v = Variety::involution();
    const auto all = fm_enumerate(v, ab, 2);
    for (const auto &x : all)
      for (const auto &y : all) {
        const auto xy = fm_multiply(x, y, v);
        CHECK(fm_multiply(x, fm_complement(y), v) == fm_complement(xy));
        CHECK(fm_multiply(fm_complement(x), y, v) == fm_complement(xy));
      }
  }
  SECTION("semilattice: multiplication distributes over joins") {
    const auto v = Variety::semilattice();
    const auto all = fm_enumerate(v, ab, 1);
    for (const auto &x : all)
      for (const auto &y : all)
        for (const auto &z : all) {
          REQUIRE(fm_multiply(x, fm_join(y, z), v) ==
                  fm_join(fm_multiply(x, y, v), fm_multiply(x, z, v)));
          REQUIRE(fm_multiply(fm_join(y, z), x, v) ==
                  fm_join(fm_multiply(y, x, v), fm_multiply(z, x, v)));
        }
  }
  SECTION("vector space: multiplication is bilinear") {
    const auto v = Variety::vect(3);
    const auto all = fm_enumerate(v, ab, 1);
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = 0; j < all.size(); j += 5)
        for (unsigned c = 0; c < 3; ++c) {
          const auto &x = all[i], &y = all[j];
          CHECK(fm_multiply(fm_scale(c, x), y, v) == fm_scale(c, fm_multiply(x, y, v)));
          CHECK(fm_multiply(x, fm_add(y, y), v) ==
                fm_add(fm_multiply(x, y, v), fm_multiply(x, y, v)));
        }
    CHECK(fm_add(fm_unit(v), fm_scale(2, fm_unit(v))).is_constant());
  }
}

TEST_CASE("normal forms merge duplicates and drop zeros") {
  const auto v = Variety::vect(3);
  const auto u = FreeElement::from_terms(v, {{Word{0}, 2}, {Word{0}, 1}, {Word{}, 1}});
  CHECK(u.terms().size() == 1);
  CHECK(u.terms()[0].word.empty());
  const auto s = FreeElement::from_terms(Variety::semilattice(), {{Word{1}, 1}, {Word{0}, 1}, {Word{1}, 1}});
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].word == Word{0});
  CHECK_THROWS_AS(FreeElement::from_terms(Variety::set(), {}), InputError);
}

TEST_CASE("text syntax round-trips") {
  for (auto v : {Variety::set(), Variety::pointed(), Variety::involution(), Variety::semilattice(),
                 Variety::vect(2), Variety::vect(5)})
    for (const auto &u : fm_enumerate(v, ab, 2))
      REQUIRE(parse_free(format_free(u, ab), ab, v) == u);
  CHECK(format_free(fm_unit(Variety::set()), ab) == "ε");
  CHECK(format_free(fm_constant(Variety::pointed()), ab) == "bot");
  CHECK(format_free(fm_constant(Variety::semilattice()), ab) == "{}");
  CHECK(format_free(fm_constant(Variety::vect(2)), ab) == "0");
  CHECK(format_free(parse_free("{ab,b}", ab, Variety::semilattice()), ab) == "{b,ab}");
  CHECK(format_free(parse_free("b + 2*a", ab, Variety::vect(3)), ab) == "2*a + b");
  CHECK(format_free(parse_free("!ab", ab, Variety::involution()), ab) == "!ab");
}

TEST_CASE("name order prefers short plain words") {
  const auto v = Variety::semilattice();
  const auto a = fm_embed_word("a", ab, v);
  const auto bb = fm_embed_word("bb", ab, v);
  const auto set = fm_join(a, fm_embed_word("b", ab, v));
  CHECK(name_less(fm_unit(v), a));
  CHECK(name_less(a, bb));
  CHECK(name_less(a, set));
  CHECK_FALSE(name_less(a, a));
}
