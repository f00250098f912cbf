#include "synalg/monoid.hpp"

#include "synalg/error.hpp"

namespace synalg {

namespace {

std::string s(Elem x) { return std::to_string(x); }

std::string translation_law(const Variety &v) {
  switch (v.tag()) {
  case VarietyTag::Pointed:
    return "zero law";
  case VarietyTag::Involution:
    return "involution law";
  case VarietyTag::Semilattice:
    return "distributivity";
  case VarietyTag::Vect:
    return "linearity";
  default:
    return "bimorphism";
  }
}

} // namespace

Elem monoid_eval(const FiniteDMonoid &m, const std::vector<Elem> &e_on_letters,
                 const FreeElement &u) {
  const FiniteDObject &c = m.carrier;
  if (u.variety() != c.variety)
    throw VarietyMismatch("free element of " + u.variety().label() + " evaluated in a " +
                          c.variety.label() + " monoid");
  auto word_value = [&](const Word &w) {
    Elem x = m.unit;
    for (auto l : w) {
      if (l >= e_on_letters.size())
        throw InputError("letter index out of range");
      x = m.multiply(x, e_on_letters[l]);
    }
    return x;
  };
  const auto &terms = u.terms();
  switch (c.variety.tag()) {
  case VarietyTag::Set:
    return word_value(terms.at(0).word);
  case VarietyTag::Pointed:
    return terms.empty() ? *c.constant : word_value(terms[0].word);
  case VarietyTag::Involution: {
    const Elem x = word_value(terms.at(0).word);
    return u.complemented() ? c.complement(x) : x;
  }
  case VarietyTag::Semilattice: {
    Elem acc = *c.constant;
    for (const auto &t : terms)
      acc = c.join(acc, word_value(t.word));
    return acc;
  }
  case VarietyTag::Vect: {
    Elem acc = *c.constant;
    for (const auto &t : terms)
      acc = c.add(acc, c.scale(t.coeff, word_value(t.word)));
    return acc;
  }
  }
  return 0;
}

Elem pair_eval(const RecognizingPair &pair, const FreeElement &u) {
  return pair.f.at(monoid_eval(pair.monoid, pair.e_on_letters, u));
}

std::vector<Violation> monoid_validate(const FiniteDMonoid &m, const Variety &v) {
  std::vector<Violation> out = validate_object(m.carrier, v);
  if (!out.empty())
    return out;
  const auto n = static_cast<Elem>(m.carrier.size);
  if (m.mult.size() != static_cast<std::size_t>(n) * n) {
    out.push_back({"shape", {}, "multiplication table has wrong size"});
    return out;
  }
  for (Elem x : m.mult)
    if (x >= n) {
      out.push_back({"shape", {x}, "multiplication entry out of range"});
      return out;
    }
  if (m.unit >= n) {
    out.push_back({"shape", {m.unit}, "unit out of range"});
    return out;
  }
  if (!m.names.empty() && m.names.size() != n)
    out.push_back({"shape", {}, "names do not cover the carrier"});

  constexpr std::size_t kCap = 1000;
  for (Elem x = 0; x < n && out.size() < kCap; ++x) {
    if (m.multiply(m.unit, x) != x || m.multiply(x, m.unit) != x)
      out.push_back({"unit", {x}, "unit law fails at " + s(x)});
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = m.multiply(x, y);
      for (Elem z = 0; z < n; ++z)
        if (m.multiply(xy, z) != m.multiply(x, m.multiply(y, z)) && out.size() < kCap)
          out.push_back({"associativity", {x, y, z},
                         "(x•y)•z != x•(y•z) at (" + s(x) + ", " + s(y) + ", " + s(z) + ")"});
    }
  }

  if (v.tag() == VarietyTag::Set)
    return out;
  const std::string law = translation_law(v);
  std::vector<Elem> left(n), right(n);
  for (Elem x = 0; x < n && out.size() < kCap; ++x) {
    for (Elem y = 0; y < n; ++y) {
      left[y] = m.multiply(x, y);
      right[y] = m.multiply(y, x);
    }
    if (auto d = homomorphism_defect(left, m.carrier, m.carrier))
      out.push_back({law, {x}, "left translation by " + s(x) + ": " + *d});
    if (auto d = homomorphism_defect(right, m.carrier, m.carrier))
      out.push_back({law, {x}, "right translation by " + s(x) + ": " + *d});
  }
  return out;
}

std::vector<Violation> pair_validate(const RecognizingPair &pair) {
  const FiniteDMonoid &m = pair.monoid;
  const Variety &v = m.carrier.variety;
  std::vector<Violation> out;
  if (pair.f.size() != m.size()) {
    out.push_back({"output", {}, "f is not total on the carrier"});
    return out;
  }
  const FiniteDObject y = v.output_object();
  for (Elem x : pair.f)
    if (x >= y.size) {
      out.push_back({"output", {x}, "f takes a value outside Y"});
      return out;
    }
  if (auto d = homomorphism_defect(pair.f, m.carrier, y))
    out.push_back({"output", {}, "f is not a morphism into Y: " + *d});
  for (Elem g : pair.e_on_letters)
    if (g >= m.size()) {
      out.push_back({"generators", {g}, "generator out of range"});
      return out;
    }
  std::vector<bool> seen(m.size(), false);
  std::vector<Elem> order;
  auto visit = [&](Elem x) {
    if (!seen[x]) {
      seen[x] = true;
      order.push_back(x);
    }
  };
  visit(m.unit);
  if (m.carrier.constant)
    visit(*m.carrier.constant);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    for (Elem g : pair.e_on_letters)
      visit(m.multiply(x, g));
    for (std::size_t k = 0; k < m.carrier.unary.size(); ++k)
      visit(m.carrier.op1(k, x));
    if (!m.carrier.binary.empty())
      for (std::size_t j = 0; j <= i; ++j) {
        visit(m.carrier.op2(order[j], x));
        visit(m.carrier.op2(x, order[j]));
      }
  }
  if (order.size() != m.size())
    out.push_back({"generators", {}, "carrier is not generated by the letters: " +
                                         std::to_string(m.size() - order.size()) +
                                         " elements unreachable"});
  return out;
}

std::optional<std::vector<Elem>> generator_isomorphism(const RecognizingPair &a,
                                                       const RecognizingPair &b,
                                                       bool compare_outputs) {
  const FiniteDMonoid &ma = a.monoid, &mb = b.monoid;
  if (ma.carrier.variety != mb.carrier.variety || ma.size() != mb.size() ||
      a.e_on_letters.size() != b.e_on_letters.size())
    return std::nullopt;
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> h(ma.size(), kUnset);
  std::vector<Elem> order;
  bool ok = true;
  auto bind = [&](Elem x, Elem y) {
    if (h[x] == kUnset) {
      h[x] = y;
      order.push_back(x);
    } else if (h[x] != y) {
      ok = false;
    }
  };
  bind(ma.unit, mb.unit);
  if (ma.carrier.constant)
    bind(*ma.carrier.constant, *mb.carrier.constant);
  for (std::size_t l = 0; l < a.e_on_letters.size(); ++l)
    bind(a.e_on_letters[l], b.e_on_letters[l]);
  for (std::size_t i = 0; i < order.size() && ok; ++i) {
    const Elem x = order[i];
    for (std::size_t l = 0; l < a.e_on_letters.size(); ++l)
      bind(ma.multiply(x, a.e_on_letters[l]), mb.multiply(h[x], b.e_on_letters[l]));
    for (std::size_t k = 0; k < ma.carrier.unary.size(); ++k)
      bind(ma.carrier.op1(k, x), mb.carrier.op1(k, h[x]));
    if (!ma.carrier.binary.empty())
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem z = order[j];
        bind(ma.carrier.op2(z, x), mb.carrier.op2(h[z], h[x]));
        bind(ma.carrier.op2(x, z), mb.carrier.op2(h[x], h[z]));
      }
  }
  if (!ok || order.size() != ma.size())
    return std::nullopt;
  std::vector<bool> hit(mb.size(), false);
  for (Elem y : h) {
    if (hit[y])
      return std::nullopt;
    hit[y] = true;
  }
  for (Elem x = 0; x < ma.size(); ++x)
    for (Elem y = 0; y < ma.size(); ++y)
      if (h[ma.multiply(x, y)] != mb.multiply(h[x], h[y]))
        return std::nullopt;
  if (homomorphism_defect(h, ma.carrier, mb.carrier))
    return std::nullopt;
  if (compare_outputs)
    for (Elem x = 0; x < ma.size(); ++x)
      if (a.f.at(x) != b.f.at(h[x]))
        return std::nullopt;
  return h;
}

} // namespace synalg
