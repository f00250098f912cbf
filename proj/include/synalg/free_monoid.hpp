#pragma once

#include "synalg/variety.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace synalg {

/// A word as a sequence of letter indices into an Alphabet.
using Word = std::vector<std::uint8_t>;

/// Shortlex order: shorter words first, then lexicographic by letter index.
bool shortlex_less(const Word &a, const Word &b);

/// Ordered list of distinct single-character letters; the order defines shortlex.
class Alphabet {
public:
  Alphabet() = default;
  /// Throws InputError on duplicates, an empty list, or reserved characters.
  explicit Alphabet(std::vector<char> letters);
  static Alphabet from_string(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char letter(std::size_t i) const { return letters_.at(i); }
  const std::vector<char> &letters() const noexcept { return letters_; }
  /// Index of `c`, or -1.
  int index_of(char c) const;

  /// Throws InputError naming the first unknown letter.
  Word parse_word(std::string_view text) const;
  /// Empty word prints as "ε".
  std::string format(const Word &w) const;

  friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
  std::vector<char> letters_;
};

/// All words over `k` letters of length <= max_len, in shortlex order.
std::vector<Word> words_up_to(std::size_t k, std::size_t max_len);

/// One monomial of a free element: a word with a nonzero coefficient.
struct Term {
  Word word;
  unsigned coeff = 1;
  friend bool operator==(const Term &, const Term &) = default;
};

/// Normal-form element of the free D-monoid on the words over an alphabet.
///
/// Every variety shares one representation: a shortlex-sorted list of terms plus a
/// complement flag.
///   SET          exactly one term, coefficient 1
///   POINTED      one term, or no terms for the basepoint
///   INVOLUTION   one term, complemented or not
///   SEMILATTICE  any finite set of words (coefficient 1); no terms is the empty set
///   VECT(p)      coefficients in 1..p-1; no terms is the zero polynomial
class FreeElement {
public:
  FreeElement() = default;

  /// Builds a normal form from arbitrary terms: merges duplicates and drops zeros.
  /// Throws InputError if the shape is impossible for the variety.
  static FreeElement from_terms(const Variety &v, std::vector<Term> terms, bool complemented = false);

  const Variety &variety() const noexcept { return variety_; }
  const std::vector<Term> &terms() const noexcept { return terms_; }
  bool complemented() const noexcept { return complemented_; }

  /// ⊥ for POINTED, ∅ for SEMILATTICE, 0 for VECT.
  bool is_constant() const noexcept { return terms_.empty(); }
  /// A single uncomplemented word with coefficient 1.
  bool is_plain_word() const noexcept {
    return !complemented_ && terms_.size() == 1 && terms_[0].coeff == 1;
  }

  friend bool operator==(const FreeElement &, const FreeElement &) = default;

private:
  Variety variety_ = Variety::set();
  bool complemented_ = false;
  std::vector<Term> terms_;
};

/// Total order used for canonical element names: smaller printed weight first, plain
/// words before compounds of equal weight, then shortlex on the terms.
bool name_less(const FreeElement &a, const FreeElement &b);

FreeElement fm_unit(const Variety &v);
FreeElement fm_embed_word(const Word &w, const Variety &v);
/// Parses the word through the alphabet; throws InputError on unknown letters.
FreeElement fm_embed_word(std::string_view word, const Alphabet &alphabet, const Variety &v);
/// The theory constant: POINTED ⊥, SEMILATTICE ∅, VECT 0. Throws for SET and INVOLUTION.
FreeElement fm_constant(const Variety &v);

FreeElement fm_multiply(const FreeElement &u, const FreeElement &w, const Variety &v);

/// Variety operations on the free monoid (the algebra structure of X^⊛).
FreeElement fm_complement(const FreeElement &u);                       // INVOLUTION
FreeElement fm_join(const FreeElement &u, const FreeElement &w);       // SEMILATTICE
FreeElement fm_add(const FreeElement &u, const FreeElement &w);        // VECT
FreeElement fm_scale(unsigned c, const FreeElement &u);                // VECT
/// Generic dispatch matching FiniteDObject's table layout: unary k, binary.
FreeElement fm_op1(std::size_t k, const FreeElement &u);
FreeElement fm_op2(const FreeElement &u, const FreeElement &w);

/// Deterministic test-harness generator. SET: all words <= max_len in shortlex. Others add
/// bounded compounds: POINTED ⊥; INVOLUTION all complemented words; SEMILATTICE all word sets
/// of size <= 3 and ∅; VECT all polynomials with <= 3 terms and 0.
std::vector<FreeElement> fm_enumerate(const Variety &v, const Alphabet &alphabet,
                                      std::size_t max_len);

/// Text syntax: words as strings, `ε` or `_` for the empty word, `!w` complement,
/// `{w1,w2}` word sets, `c1*w1 + c2*w2` polynomials, `bot` for ⊥, `{}` / `0` for the constant.
std::string format_free(const FreeElement &u, const Alphabet &alphabet);
FreeElement parse_free(std::string_view text, const Alphabet &alphabet, const Variety &v);

} // namespace synalg
