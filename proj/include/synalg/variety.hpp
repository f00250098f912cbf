#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace synalg {

/// Element id inside a finite carrier. Carriers name their elements 0..n-1.
using Elem = std::uint32_t;

enum class VarietyTag { Set, Pointed, Involution, Semilattice, Vect };

class FiniteDObject;

/// One of the five supported commutative varieties. VECT carries its prime.
class Variety {
public:
  static Variety set() { return Variety(VarietyTag::Set, 0); }
  static Variety pointed() { return Variety(VarietyTag::Pointed, 0); }
  static Variety involution() { return Variety(VarietyTag::Involution, 0); }
  static Variety semilattice() { return Variety(VarietyTag::Semilattice, 0); }
  /// Throws InputError unless p is a prime <= 31.
  static Variety vect(unsigned p);

  /// Parses "set", "pointed", "involution", "jsl" (or "semilattice"), "vect".
  static Variety from_name(const std::string &name, unsigned p = 2);

  VarietyTag tag() const noexcept { return tag_; }
  /// Field size for VECT, 0 otherwise.
  unsigned prime() const noexcept { return p_; }

  /// Pointed, semilattice and vector-space theories have a constant (basepoint, bottom, zero).
  bool has_constant() const noexcept {
    return tag_ == VarietyTag::Pointed || tag_ == VarietyTag::Semilattice ||
           tag_ == VarietyTag::Vect;
  }
  /// Number of unary operation tables an object of this variety carries.
  std::size_t unary_arity() const noexcept {
    switch (tag_) {
    case VarietyTag::Involution:
      return 1;
    case VarietyTag::Vect:
      return p_;
    default:
      return 0;
    }
  }
  bool has_binary() const noexcept {
    return tag_ == VarietyTag::Semilattice || tag_ == VarietyTag::Vect;
  }

  /// File-format name: set | pointed | involution | jsl | vect
  std::string name() const;
  /// Human label, e.g. "VECT(3)".
  std::string label() const;

  /// The fixed output object Y.
  FiniteDObject output_object() const;

  /// Parses an element of Y as written in files ("0", "1", "bot", field digits).
  std::optional<Elem> parse_output(const std::string &text) const;
  std::string format_output(Elem y) const;

  friend bool operator==(const Variety &, const Variety &) = default;

private:
  Variety(VarietyTag tag, unsigned p) : tag_(tag), p_(p) {}
  VarietyTag tag_;
  unsigned p_;
};

/// A finite algebra of a supported variety, stored as operation tables.
///
/// Layout by variety:
///   SET          no tables
///   POINTED      constant = basepoint (always id 0)
///   INVOLUTION   unary[0] = complement
///   SEMILATTICE  constant = bottom, binary = join
///   VECT(p)      constant = zero, unary[c] = scalar multiplication by c (c < p), binary = addition
struct FiniteDObject {
  Variety variety = Variety::set();
  std::size_t size = 0;
  std::optional<Elem> constant;
  std::vector<std::vector<Elem>> unary;
  /// Row-major size*size table; empty when the variety has no binary operation.
  std::vector<Elem> binary;

  Elem op2(Elem x, Elem y) const { return binary[static_cast<std::size_t>(x) * size + y]; }
  Elem op1(std::size_t k, Elem x) const { return unary[k][x]; }

  Elem complement(Elem x) const { return unary.at(0)[x]; }
  Elem join(Elem x, Elem y) const { return op2(x, y); }
  Elem add(Elem x, Elem y) const { return op2(x, y); }
  Elem scale(unsigned c, Elem x) const { return unary.at(c % variety.prime())[x]; }
  Elem neg(Elem x) const { return unary.at(variety.prime() - 1)[x]; }

  friend bool operator==(const FiniteDObject &, const FiniteDObject &) = default;

  /// Bare carrier with no operations (SET only).
  static FiniteDObject set_of(std::size_t n);
};

/// A named law violation found by an exhaustive table scan.
struct Violation {
  std::string law;
  std::vector<Elem> witness;
  std::string message;
};

std::string describe(const Violation &v);

/// Exhaustively checks every equation of the variety on the object's tables.
std::vector<Violation> validate_object(const FiniteDObject &obj, const Variety &v);

/// True iff `map` commutes with every operation of the variety. Throws InputError on bad ids.
bool is_homomorphism(const std::vector<Elem> &map, const FiniteDObject &from,
                     const FiniteDObject &to, const Variety &v);

/// Like is_homomorphism but reports the first failing operation, or nullopt when it is one.
std::optional<std::string> homomorphism_defect(const std::vector<Elem> &map,
                                               const FiniteDObject &from,
                                               const FiniteDObject &to);

/// Disjoint blocks covering 0..size-1.
class Partition {
public:
  Partition() = default;
  /// Throws InputError unless the blocks cover 0..size-1 exactly once.
  static Partition from_blocks(std::size_t size, const std::vector<std::vector<Elem>> &blocks);
  /// Blocks are renumbered in order of their least element.
  static Partition from_labels(const std::vector<std::size_t> &labels);
  static Partition discrete(std::size_t size);
  static Partition total(std::size_t size);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(Elem x) const { return block_of_.at(x); }
  const std::vector<std::vector<Elem>> &blocks() const noexcept { return blocks_; }

  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Elem>> blocks_;
};

struct Subalgebra {
  FiniteDObject object;
  /// inclusion[i] is the id in the ambient object of sub-element i.
  std::vector<Elem> inclusion;
};

/// Least subset containing the seeds (and the theory's constant), closed under all operations.
/// Elements are numbered in discovery order: constant, seeds, then closure results.
Subalgebra generated_subalgebra(const FiniteDObject &obj, const std::vector<Elem> &seeds,
                                const Variety &v);

/// Subalgebra on an explicit closed subset, in the given order. Throws InputError if not closed.
Subalgebra restrict_to(const FiniteDObject &obj, const std::vector<Elem> &elements);

struct Quotient {
  FiniteDObject object;
  /// projection[x] is the block (quotient element) containing x.
  std::vector<Elem> projection;
};

/// Quotient by a congruence. Throws NotACongruence naming the offending operation.
Quotient quotient_by_partition(const FiniteDObject &obj, const Partition &p, const Variety &v);

/// Tabulates an object from element-level operations on 0..n-1.
template <class Unary, class Binary>
FiniteDObject tabulate(const Variety &v, std::size_t n, std::optional<Elem> constant,
                       Unary &&unary, Binary &&binary) {
  FiniteDObject out;
  out.variety = v;
  out.size = n;
  out.constant = v.has_constant() ? constant : std::nullopt;
  out.unary.resize(v.unary_arity());
  for (std::size_t k = 0; k < out.unary.size(); ++k) {
    out.unary[k].resize(n);
    for (std::size_t x = 0; x < n; ++x)
      out.unary[k][x] = unary(k, static_cast<Elem>(x));
  }
  if (v.has_binary()) {
    out.binary.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        out.binary[x * n + y] = binary(static_cast<Elem>(x), static_cast<Elem>(y));
  }
  return out;
}

} // namespace synalg
