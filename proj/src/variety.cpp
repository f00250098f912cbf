#include "synalg/variety.hpp"

#include "synalg/error.hpp"

#include <algorithm>
#include <numeric>

namespace synalg {

namespace {

bool is_prime(unsigned p) {
  if (p < 2)
    return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::string unary_name(const Variety &v, std::size_t k) {
  if (v.tag() == VarietyTag::Involution)
    return "complement";
  return "scale by " + std::to_string(k);
}

std::string binary_name(const Variety &v) {
  return v.tag() == VarietyTag::Semilattice ? "join" : "add";
}

constexpr std::size_t kMaxViolations = 10000;

class ViolationSink {
public:
  void add(std::string law, std::vector<Elem> witness, std::string message) {
    if (out_.size() < kMaxViolations)
      out_.push_back({std::move(law), std::move(witness), std::move(message)});
  }
  bool full() const { return out_.size() >= kMaxViolations; }
  std::vector<Violation> take() { return std::move(out_); }

private:
  std::vector<Violation> out_;
};

std::string s(Elem x) { return std::to_string(x); }

bool check_shape(const FiniteDObject &obj, const Variety &v, ViolationSink &sink) {
  const std::size_t n = obj.size;
  bool ok = true;
  if (obj.variety != v) {
    sink.add("shape", {}, "object belongs to " + obj.variety.label() + ", expected " + v.label());
    return false;
  }
  if (v.has_constant() != obj.constant.has_value()) {
    sink.add("shape", {}, v.has_constant() ? "missing constant" : "unexpected constant");
    ok = false;
  } else if (obj.constant && *obj.constant >= n) {
    sink.add("shape", {*obj.constant}, "constant out of range");
    ok = false;
  }
  if (obj.unary.size() != v.unary_arity()) {
    sink.add("shape", {}, "expected " + std::to_string(v.unary_arity()) + " unary tables, got " +
                              std::to_string(obj.unary.size()));
    ok = false;
  } else {
    for (std::size_t k = 0; k < obj.unary.size(); ++k) {
      if (obj.unary[k].size() != n) {
        sink.add("shape", {}, unary_name(v, k) + " table has wrong length");
        ok = false;
        continue;
      }
      for (Elem x = 0; x < n; ++x)
        if (obj.unary[k][x] >= n) {
          sink.add("shape", {x}, unary_name(v, k) + " table entry out of range at " + s(x));
          ok = false;
        }
    }
  }
  const std::size_t want = v.has_binary() ? n * n : 0;
  if (obj.binary.size() != want) {
    sink.add("shape", {}, "binary table has wrong size");
    ok = false;
  } else {
    for (std::size_t i = 0; i < obj.binary.size(); ++i)
      if (obj.binary[i] >= n) {
        sink.add("shape", {static_cast<Elem>(i / n), static_cast<Elem>(i % n)},
                 binary_name(v) + " table entry out of range");
        ok = false;
      }
  }
  return ok;
}

void check_commutative_monoid(const FiniteDObject &obj, const std::string &op,
                              ViolationSink &sink) {
  const auto n = static_cast<Elem>(obj.size);
  const Elem unit = *obj.constant;
  for (Elem x = 0; x < n && !sink.full(); ++x) {
    if (obj.op2(unit, x) != x)
      sink.add(op + " unit", {x}, op + " with the constant does not fix " + s(x));
    for (Elem y = 0; y < n; ++y) {
      if (obj.op2(x, y) != obj.op2(y, x))
        sink.add(op + " commutativity", {x, y}, op + " not commutative at (" + s(x) + ", " + s(y) + ")");
      for (Elem z = 0; z < n; ++z)
        if (obj.op2(obj.op2(x, y), z) != obj.op2(x, obj.op2(y, z)))
          sink.add(op + " associativity", {x, y, z},
                   op + " not associative at (" + s(x) + ", " + s(y) + ", " + s(z) + ")");
    }
  }
}

} // namespace

Variety Variety::vect(unsigned p) {
  if (!is_prime(p) || p > 31)
    throw InputError("VECT(p) requires a prime p <= 31, got " + std::to_string(p));
  return Variety(VarietyTag::Vect, p);
}

Variety Variety::from_name(const std::string &name, unsigned p) {
  if (name == "set")
    return set();
  if (name == "pointed")
    return pointed();
  if (name == "involution")
    return involution();
  if (name == "jsl" || name == "semilattice")
    return semilattice();
  if (name == "vect")
    return vect(p);
  throw InputError("unknown variety '" + name + "'");
}

std::string Variety::name() const {
  switch (tag_) {
  case VarietyTag::Set:
    return "set";
  case VarietyTag::Pointed:
    return "pointed";
  case VarietyTag::Involution:
    return "involution";
  case VarietyTag::Semilattice:
    return "jsl";
  case VarietyTag::Vect:
    return "vect";
  }
  return "?";
}

std::string Variety::label() const {
  switch (tag_) {
  case VarietyTag::Set:
    return "SET";
  case VarietyTag::Pointed:
    return "POINTED";
  case VarietyTag::Involution:
    return "INVOLUTION";
  case VarietyTag::Semilattice:
    return "SEMILATTICE";
  case VarietyTag::Vect:
    return "VECT(" + std::to_string(p_) + ")";
  }
  return "?";
}

FiniteDObject Variety::output_object() const {
  switch (tag_) {
  case VarietyTag::Set:
    return FiniteDObject::set_of(2);
  case VarietyTag::Pointed:
    return tabulate(*this, 2, Elem{0}, [](std::size_t, Elem x) { return x; },
                    [](Elem, Elem) { return Elem{0}; });
  case VarietyTag::Involution:
    return tabulate(*this, 2, std::nullopt, [](std::size_t, Elem x) { return Elem{1} - x; },
                    [](Elem, Elem) { return Elem{0}; });
  case VarietyTag::Semilattice:
    return tabulate(*this, 2, Elem{0}, [](std::size_t, Elem x) { return x; },
                    [](Elem x, Elem y) { return std::max(x, y); });
  case VarietyTag::Vect: {
    const unsigned p = p_;
    return tabulate(*this, p, Elem{0},
                    [p](std::size_t c, Elem x) { return static_cast<Elem>((c * x) % p); },
                    [p](Elem x, Elem y) { return static_cast<Elem>((x + y) % p); });
  }
  }
  return {};
}

std::optional<Elem> Variety::parse_output(const std::string &text) const {
  if (tag_ == VarietyTag::Pointed) {
    if (text == "bot" || text == "⊥")
      return Elem{0};
    if (text == "1")
      return Elem{1};
    return std::nullopt;
  }
  const unsigned limit = tag_ == VarietyTag::Vect ? p_ : 2;
  if (text.empty() || text.size() > 2 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  const unsigned value = static_cast<unsigned>(std::stoul(text));
  if (value >= limit || (text.size() > 1 && text[0] == '0'))
    return std::nullopt;
  return static_cast<Elem>(value);
}

std::string Variety::format_output(Elem y) const {
  if (tag_ == VarietyTag::Pointed)
    return y == 0 ? "bot" : "1";
  return std::to_string(y);
}

FiniteDObject FiniteDObject::set_of(std::size_t n) {
  FiniteDObject out;
  out.variety = Variety::set();
  out.size = n;
  return out;
}

std::string describe(const Violation &v) {
  return v.law + ": " + v.message;
}

std::vector<Violation> validate_object(const FiniteDObject &obj, const Variety &v) {
  ViolationSink sink;
  if (!check_shape(obj, v, sink))
    return sink.take();
  const auto n = static_cast<Elem>(obj.size);
  switch (v.tag()) {
  case VarietyTag::Set:
    break;
  case VarietyTag::Pointed:
    if (*obj.constant != 0)
      sink.add("basepoint", {*obj.constant}, "basepoint must carry id 0");
    break;
  case VarietyTag::Involution:
    for (Elem x = 0; x < n; ++x)
      if (obj.complement(obj.complement(x)) != x)
        sink.add("involution", {x}, "involution not self-inverse at " + s(x));
    break;
  case VarietyTag::Semilattice:
    for (Elem x = 0; x < n; ++x)
      if (obj.join(x, x) != x)
        sink.add("join idempotence", {x}, "join not idempotent at " + s(x));
    check_commutative_monoid(obj, "join", sink);
    break;
  case VarietyTag::Vect: {
    const unsigned p = v.prime();
    const Elem zero = *obj.constant;
    check_commutative_monoid(obj, "add", sink);
    for (Elem x = 0; x < n && !sink.full(); ++x) {
      if (obj.add(x, obj.neg(x)) != zero)
        sink.add("additive inverse", {x}, "x + (p-1)x is not zero at " + s(x));
      if (obj.scale(0, x) != zero)
        sink.add("scalar zero", {x}, "0 * x is not zero at " + s(x));
      if (obj.scale(1, x) != x)
        sink.add("scalar one", {x}, "1 * x is not x at " + s(x));
      for (unsigned c = 0; c < p; ++c) {
        for (unsigned d = 0; d < p; ++d) {
          if (obj.scale(c, obj.scale(d, x)) != obj.scale((c * d) % p, x))
            sink.add("scalar associativity", {x, c, d},
                     "c(dx) != (cd)x at x=" + s(x) + " c=" + s(c) + " d=" + s(d));
          if (obj.scale((c + d) % p, x) != obj.add(obj.scale(c, x), obj.scale(d, x)))
            sink.add("scalar distributivity", {x, c, d},
                     "(c+d)x != cx+dx at x=" + s(x) + " c=" + s(c) + " d=" + s(d));
        }
        for (Elem y = 0; y < n; ++y)
          if (obj.scale(c, obj.add(x, y)) != obj.add(obj.scale(c, x), obj.scale(c, y)))
            sink.add("vector distributivity", {x, y, c},
                     "c(x+y) != cx+cy at x=" + s(x) + " y=" + s(y) + " c=" + s(c));
      }
    }
    break;
  }
  }
  return sink.take();
}

std::optional<std::string> homomorphism_defect(const std::vector<Elem> &map,
                                               const FiniteDObject &from,
                                               const FiniteDObject &to) {
  if (from.variety != to.variety)
    throw VarietyMismatch("homomorphism between " + from.variety.label() + " and " +
                          to.variety.label());
  if (map.size() != from.size)
    throw InputError("map is not total: has " + std::to_string(map.size()) + " entries for " +
                     std::to_string(from.size) + " elements");
  for (Elem x : map)
    if (x >= to.size)
      throw InputError("map sends an element to undefined id " + std::to_string(x));
  const Variety &v = from.variety;
  if (from.constant && map[*from.constant] != *to.constant)
    return std::string(v.tag() == VarietyTag::Pointed ? "basepoint not preserved"
                                                      : "constant not preserved");
  for (std::size_t k = 0; k < from.unary.size(); ++k)
    for (Elem x = 0; x < from.size; ++x)
      if (map[from.op1(k, x)] != to.op1(k, map[x]))
        return unary_name(v, k) + " not preserved at " + s(x);
  if (!from.binary.empty())
    for (Elem x = 0; x < from.size; ++x)
      for (Elem y = 0; y < from.size; ++y)
        if (map[from.op2(x, y)] != to.op2(map[x], map[y]))
          return binary_name(v) + " not preserved at (" + s(x) + ", " + s(y) + ")";
  return std::nullopt;
}

bool is_homomorphism(const std::vector<Elem> &map, const FiniteDObject &from,
                     const FiniteDObject &to, const Variety &v) {
  if (from.variety != v || to.variety != v)
    throw VarietyMismatch("objects do not belong to " + v.label());
  return !homomorphism_defect(map, from, to).has_value();
}

Partition Partition::from_blocks(std::size_t size, const std::vector<std::vector<Elem>> &blocks) {
  std::vector<std::size_t> labels(size, SIZE_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw InputError("partition has an empty block");
    for (Elem x : blocks[b]) {
      if (x >= size)
        throw InputError("partition mentions undefined element " + std::to_string(x));
      if (labels[x] != SIZE_MAX)
        throw InputError("element " + std::to_string(x) + " appears in two blocks");
      labels[x] = b;
    }
  }
  for (std::size_t x = 0; x < size; ++x)
    if (labels[x] == SIZE_MAX)
      throw InputError("element " + std::to_string(x) + " is not covered by the partition");
  return from_labels(labels);
}

Partition Partition::from_labels(const std::vector<std::size_t> &labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  std::vector<std::size_t> sorted_labels(labels);
  std::sort(sorted_labels.begin(), sorted_labels.end());
  sorted_labels.erase(std::unique(sorted_labels.begin(), sorted_labels.end()), sorted_labels.end());
  std::vector<std::size_t> block_for(sorted_labels.size(), SIZE_MAX);
  for (std::size_t x = 0; x < labels.size(); ++x) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(sorted_labels.begin(), sorted_labels.end(), labels[x]) -
        sorted_labels.begin());
    if (block_for[idx] == SIZE_MAX) {
      block_for[idx] = p.blocks_.size();
      p.blocks_.emplace_back();
    }
    p.block_of_[x] = block_for[idx];
    p.blocks_[block_for[idx]].push_back(static_cast<Elem>(x));
  }
  return p;
}

Partition Partition::discrete(std::size_t size) {
  std::vector<std::size_t> labels(size);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

Partition Partition::total(std::size_t size) {
  return from_labels(std::vector<std::size_t>(size, 0));
}

Subalgebra restrict_to(const FiniteDObject &obj, const std::vector<Elem> &elements) {
  constexpr Elem kAbsent = ~Elem{0};
  std::vector<Elem> index(obj.size, kAbsent);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= obj.size)
      throw InputError("undefined element " + std::to_string(elements[i]));
    if (index[elements[i]] != kAbsent)
      throw InputError("duplicate element " + std::to_string(elements[i]));
    index[elements[i]] = static_cast<Elem>(i);
  }
  auto lookup = [&](Elem ambient) {
    if (index[ambient] == kAbsent)
      throw InputError("subset is not closed under the operations (missing " +
                       std::to_string(ambient) + ")");
    return index[ambient];
  };
  std::optional<Elem> constant;
  if (obj.constant)
    constant = lookup(*obj.constant);
  Subalgebra out{
      tabulate(
          obj.variety, elements.size(), constant,
          [&](std::size_t k, Elem x) { return lookup(obj.op1(k, elements[x])); },
          [&](Elem x, Elem y) { return lookup(obj.op2(elements[x], elements[y])); }),
      elements};
  return out;
}

Subalgebra generated_subalgebra(const FiniteDObject &obj, const std::vector<Elem> &seeds,
                                const Variety &v) {
  if (obj.variety != v)
    throw VarietyMismatch("object belongs to " + obj.variety.label() + ", expected " + v.label());
  std::vector<bool> present(obj.size, false);
  std::vector<Elem> elems;
  auto visit = [&](Elem x) {
    if (x >= obj.size)
      throw InputError("seed " + std::to_string(x) + " is not an element");
    if (!present[x]) {
      present[x] = true;
      elems.push_back(x);
    }
  };
  if (obj.constant)
    visit(*obj.constant);
  for (Elem x : seeds)
    visit(x);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Elem x = elems[i];
    for (std::size_t k = 0; k < obj.unary.size(); ++k)
      visit(obj.op1(k, x));
    if (!obj.binary.empty())
      for (std::size_t j = 0; j <= i; ++j) {
        visit(obj.op2(elems[j], x));
        visit(obj.op2(x, elems[j]));
      }
  }
  return restrict_to(obj, elems);
}

Quotient quotient_by_partition(const FiniteDObject &obj, const Partition &p, const Variety &v) {
  if (obj.variety != v)
    throw VarietyMismatch("object belongs to " + obj.variety.label() + ", expected " + v.label());
  if (p.size() != obj.size)
    throw InputError("partition size does not match the carrier");
  const auto &blocks = p.blocks();
  auto rep = [&](Elem x) { return blocks[p.block_of(x)].front(); };
  for (std::size_t k = 0; k < obj.unary.size(); ++k)
    for (Elem x = 0; x < obj.size; ++x)
      if (p.block_of(obj.op1(k, x)) != p.block_of(obj.op1(k, rep(x))))
        throw NotACongruence(unary_name(v, k), p.block_of(obj.op1(k, x)),
                             p.block_of(obj.op1(k, rep(x))));
  if (!obj.binary.empty())
    for (Elem x = 0; x < obj.size; ++x)
      for (Elem y = 0; y < obj.size; ++y)
        if (p.block_of(obj.op2(x, y)) != p.block_of(obj.op2(rep(x), rep(y))))
          throw NotACongruence(binary_name(v), p.block_of(obj.op2(x, y)),
                               p.block_of(obj.op2(rep(x), rep(y))));
  Quotient out;
  std::optional<Elem> constant;
  if (obj.constant)
    constant = static_cast<Elem>(p.block_of(*obj.constant));
  out.object = tabulate(
      v, blocks.size(), constant,
      [&](std::size_t k, Elem b) { return static_cast<Elem>(p.block_of(obj.op1(k, blocks[b][0]))); },
      [&](Elem a, Elem b) {
        return static_cast<Elem>(p.block_of(obj.op2(blocks[a][0], blocks[b][0])));
      });
  out.projection.resize(obj.size);
  for (Elem x = 0; x < obj.size; ++x)
    out.projection[x] = static_cast<Elem>(p.block_of(x));
  return out;
}

} // namespace synalg
