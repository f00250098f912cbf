#pragma once

#include "synalg/free_monoid.hpp"
#include "synalg/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace synalg {

/// A finite monoid object in a variety: carrier with variety operations plus a
/// multiplication that is a bimorphism.
struct FiniteDMonoid {
  FiniteDObject carrier;
  /// Row-major carrier.size × carrier.size table; mult(x, y) = x • y.
  std::vector<Elem> mult;
  Elem unit = 0;
  /// Canonical name of each element: a free-monoid preimage.
  std::vector<FreeElement> names;

  std::size_t size() const noexcept { return carrier.size; }
  Elem multiply(Elem x, Elem y) const { return mult[static_cast<std::size_t>(x) * carrier.size + y]; }
};

/// A monoid together with the generator map on letters and an output morphism into Y.
/// Together these present the quotient e: X^⊛ ↠ M and f: M → Y.
struct RecognizingPair {
  FiniteDMonoid monoid;
  std::vector<Elem> e_on_letters;
  std::vector<Elem> f;
};

/// e(u) for a free element: the product of generators for each word, combined with the
/// carrier's variety operations.
Elem monoid_eval(const FiniteDMonoid &m, const std::vector<Elem> &e_on_letters,
                 const FreeElement &u);

/// f(e(u)).
Elem pair_eval(const RecognizingPair &pair, const FreeElement &u);

/// Exhaustive associativity, unit, bimorphism and variety-specific law checks.
std::vector<Violation> monoid_validate(const FiniteDMonoid &m, const Variety &v);

/// Checks the RecognizingPair invariants: f is a morphism into Y, and the carrier is generated
/// by the unit and the letter images.
std::vector<Violation> pair_validate(const RecognizingPair &pair);

/// Unique isomorphism sending generators to generators (and unit to unit), if one exists.
/// Outputs are compared too when `compare_outputs` is set.
std::optional<std::vector<Elem>> generator_isomorphism(const RecognizingPair &a,
                                                       const RecognizingPair &b,
                                                       bool compare_outputs = true);

} // namespace synalg
