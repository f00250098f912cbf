#include "synalg/automaton.hpp"

#include "synalg/error.hpp"

#include <random>

namespace synalg {

std::vector<Violation> validate_automaton(const DAutomaton &a) {
  std::vector<Violation> out;
  if (a.states.variety != a.variety) {
    out.push_back({"shape", {}, "state object belongs to " + a.states.variety.label()});
    return out;
  }
  for (auto &v : validate_object(a.states, a.variety)) {
    v.message = "states: " + v.message;
    out.push_back(std::move(v));
  }
  if (!out.empty())
    return out;
  const std::size_t n = a.size();
  if (n == 0) {
    out.push_back({"shape", {}, "automaton has no states"});
    return out;
  }
  if (a.alphabet.size() == 0)
    out.push_back({"shape", {}, "empty alphabet"});
  if (a.delta.size() != a.alphabet.size()) {
    out.push_back({"shape", {}, "one transition map per letter required"});
    return out;
  }
  for (std::size_t l = 0; l < a.delta.size(); ++l) {
    if (a.delta[l].size() != n) {
      out.push_back({"shape", {}, std::string("transition '") + a.alphabet.letter(l) +
                                      "' is not total"});
      return out;
    }
    for (Elem q : a.delta[l])
      if (q >= n) {
        out.push_back({"shape", {q}, std::string("transition '") + a.alphabet.letter(l) +
                                         "' leaves the state set"});
        return out;
      }
  }
  if (a.initial >= n)
    out.push_back({"shape", {a.initial}, "initial state out of range"});
  const FiniteDObject y = a.variety.output_object();
  if (a.output.size() != n) {
    out.push_back({"shape", {}, "output is not total"});
    return out;
  }
  for (Elem q = 0; q < n; ++q)
    if (a.output[q] >= y.size) {
      out.push_back({"shape", {q}, "output of state " + std::to_string(q) + " is not in Y"});
      return out;
    }
  if (!a.state_names.empty() && a.state_names.size() != n)
    out.push_back({"shape", {}, "state names do not match the state count"});

  for (std::size_t l = 0; l < a.delta.size(); ++l)
    if (auto d = homomorphism_defect(a.delta[l], a.states, a.states))
      out.push_back({"transition endomorphism", {static_cast<Elem>(l)},
                     std::string("transition '") + a.alphabet.letter(l) +
                         "' is not an endomorphism: " + *d});
  if (auto d = homomorphism_defect(a.output, a.states, y)) {
    if (a.variety.tag() == VarietyTag::Semilattice)
      out.push_back({"prime upset", {}, "final states are not a prime upset: " + *d});
    else
      out.push_back({"output morphism", {}, "output is not a morphism into Y: " + *d});
  }
  return out;
}

void require_valid(const DAutomaton &a) {
  const auto violations = validate_automaton(a);
  if (violations.empty())
    return;
  std::vector<std::string> text;
  for (const auto &v : violations)
    text.push_back(describe(v));
  throw ValidationError(std::move(text));
}

Elem run_from(const DAutomaton &a, Elem from, const Word &w) {
  Elem q = from;
  for (auto l : w) {
    if (l >= a.delta.size())
      throw InputError("letter index out of range");
    q = a.delta[l][q];
  }
  return q;
}

Elem run(const DAutomaton &a, const Word &w) { return run_from(a, a.initial, w); }

Elem run(const DAutomaton &a, std::string_view word) {
  return run(a, a.alphabet.parse_word(word));
}

Elem act(const DAutomaton &a, Elem from, const FreeElement &u) {
  if (u.variety() != a.variety)
    throw VarietyMismatch("free element of " + u.variety().label() + " fed to a " +
                          a.variety.label() + " automaton");
  const FiniteDObject &q = a.states;
  const auto &terms = u.terms();
  switch (a.variety.tag()) {
  case VarietyTag::Set:
    return run_from(a, from, terms.at(0).word);
  case VarietyTag::Pointed:
    return terms.empty() ? *q.constant : run_from(a, from, terms[0].word);
  case VarietyTag::Involution: {
    const Elem x = run_from(a, from, terms.at(0).word);
    return u.complemented() ? q.complement(x) : x;
  }
  case VarietyTag::Semilattice: {
    Elem acc = *q.constant;
    for (const auto &t : terms)
      acc = q.join(acc, run_from(a, from, t.word));
    return acc;
  }
  case VarietyTag::Vect: {
    Elem acc = *q.constant;
    for (const auto &t : terms)
      acc = q.add(acc, q.scale(t.coeff, run_from(a, from, t.word)));
    return acc;
  }
  }
  return 0;
}

Elem eval(const DAutomaton &a, const FreeElement &u) { return a.output.at(act(a, a.initial, u)); }

bool accepts(const DAutomaton &a, const Word &w) { return a.output.at(run(a, w)) == 1; }

DAutomaton derived_automaton(const FiniteDMonoid &m, const Alphabet &alphabet,
                             const std::vector<Elem> &gen, const std::vector<Elem> &f) {
  if (gen.size() != alphabet.size())
    throw InputError("one generator per letter required");
  for (Elem g : gen)
    if (g >= m.size())
      throw InputError("generator is not a monoid element");
  const Variety &v = m.carrier.variety;
  if (auto d = homomorphism_defect(f, m.carrier, v.output_object()))
    throw InputError("output map is not a morphism into Y: " + *d);
  DAutomaton a;
  a.variety = v;
  a.alphabet = alphabet;
  a.states = m.carrier;
  a.delta.assign(alphabet.size(), std::vector<Elem>(m.size()));
  for (std::size_t l = 0; l < alphabet.size(); ++l)
    for (Elem x = 0; x < m.size(); ++x)
      a.delta[l][x] = m.multiply(x, gen[l]);
  a.initial = m.unit;
  a.output = f;
  if (m.names.size() == m.size())
    for (const auto &name : m.names)
      a.state_names.push_back("[" + format_free(name, alphabet) + "]");
  return a;
}

DAutomaton make_dfa(const Alphabet &alphabet, const std::vector<std::vector<Elem>> &delta,
                    Elem initial, const std::vector<bool> &final) {
  DAutomaton a;
  a.variety = Variety::set();
  a.alphabet = alphabet;
  a.states = FiniteDObject::set_of(final.size());
  a.delta = delta;
  a.initial = initial;
  a.output.resize(final.size());
  for (std::size_t q = 0; q < final.size(); ++q)
    a.output[q] = final[q] ? 1 : 0;
  return a;
}

DAutomaton permute_states(const DAutomaton &a, const std::vector<Elem> &perm) {
  const std::size_t n = a.size();
  if (perm.size() != n)
    throw InputError("permutation size mismatch");
  std::vector<Elem> inv(n);
  for (Elem q = 0; q < n; ++q)
    inv.at(perm[q]) = q;
  DAutomaton b;
  b.variety = a.variety;
  b.alphabet = a.alphabet;
  const FiniteDObject &s = a.states;
  std::optional<Elem> constant;
  if (s.constant)
    constant = perm[*s.constant];
  b.states = tabulate(
      a.variety, n, constant, [&](std::size_t k, Elem x) { return perm[s.op1(k, inv[x])]; },
      [&](Elem x, Elem y) { return perm[s.op2(inv[x], inv[y])]; });
  b.delta.assign(a.delta.size(), std::vector<Elem>(n));
  for (std::size_t l = 0; l < a.delta.size(); ++l)
    for (Elem q = 0; q < n; ++q)
      b.delta[l][perm[q]] = perm[a.delta[l][q]];
  b.initial = perm[a.initial];
  b.output.resize(n);
  for (Elem q = 0; q < n; ++q)
    b.output[perm[q]] = a.output[q];
  if (!a.state_names.empty()) {
    b.state_names.resize(n);
    for (Elem q = 0; q < n; ++q)
      b.state_names[perm[q]] = a.state_names[q];
  }
  return b;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, const std::string &what) {
  std::size_t result = 1;
  const std::size_t limit = size_guard();
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > limit / base + 1)
      throw SizeGuardExceeded(what, result * base, limit);
    result *= base;
  }
  check_size_guard(what, result);
  return result;
}

} // namespace

DAutomaton lift_automaton(const DAutomaton &classical, const Variety &target) {
  if (classical.variety.tag() != VarietyTag::Set)
    throw VarietyMismatch("lift_automaton expects a SET automaton");
  require_valid(classical);
  const std::size_t n = classical.size();
  const std::size_t letters = classical.alphabet.size();
  DAutomaton a;
  a.variety = target;
  a.alphabet = classical.alphabet;
  auto base_name = [&](Elem q) { return classical.state_name(q); };

  switch (target.tag()) {
  case VarietyTag::Set:
    return classical;

  case VarietyTag::Pointed: {
    const std::size_t m = n + 1;
    check_size_guard("lift to POINTED", m);
    a.states = tabulate(target, m, Elem{0}, [](std::size_t, Elem x) { return x; },
                        [](Elem, Elem) { return Elem{0}; });
    a.delta.assign(letters, std::vector<Elem>(m, 0));
    for (std::size_t l = 0; l < letters; ++l)
      for (Elem q = 0; q < n; ++q)
        a.delta[l][q + 1] = classical.delta[l][q] + 1;
    a.initial = classical.initial + 1;
    a.output.assign(m, 0);
    for (Elem q = 0; q < n; ++q)
      a.output[q + 1] = classical.output[q] == 1 ? 1 : 0;
    a.state_names.push_back("bot");
    for (Elem q = 0; q < n; ++q)
      a.state_names.push_back(base_name(q));
    return a;
  }

  case VarietyTag::Involution: {
    const std::size_t m = 2 * n;
    check_size_guard("lift to INVOLUTION", m);
    const auto half = static_cast<Elem>(n);
    a.states = tabulate(
        target, m, std::nullopt,
        [half](std::size_t, Elem x) { return x < half ? x + half : x - half; },
        [](Elem, Elem) { return Elem{0}; });
    a.delta.assign(letters, std::vector<Elem>(m));
    for (std::size_t l = 0; l < letters; ++l)
      for (Elem q = 0; q < n; ++q) {
        a.delta[l][q] = classical.delta[l][q];
        a.delta[l][q + half] = classical.delta[l][q] + half;
      }
    a.initial = classical.initial;
    a.output.resize(m);
    for (Elem q = 0; q < n; ++q) {
      a.output[q] = classical.output[q];
      a.output[q + half] = 1 - classical.output[q];
    }
    for (Elem q = 0; q < n; ++q)
      a.state_names.push_back(base_name(q));
    for (Elem q = 0; q < n; ++q)
      a.state_names.push_back("!" + base_name(q));
    return a;
  }

  case VarietyTag::Semilattice: {
    const std::size_t m = checked_power(2, n, "lift to SEMILATTICE");
    a.states = tabulate(target, m, Elem{0}, [](std::size_t, Elem x) { return x; },
                        [](Elem x, Elem y) { return x | y; });
    a.delta.assign(letters, std::vector<Elem>(m, 0));
    for (std::size_t l = 0; l < letters; ++l)
      for (Elem s = 0; s < m; ++s) {
        Elem image = 0;
        for (Elem q = 0; q < n; ++q)
          if (s & (Elem{1} << q))
            image |= Elem{1} << classical.delta[l][q];
        a.delta[l][s] = image;
      }
    a.initial = Elem{1} << classical.initial;
    Elem final_mask = 0;
    for (Elem q = 0; q < n; ++q)
      if (classical.output[q] == 1)
        final_mask |= Elem{1} << q;
    a.output.resize(m);
    for (Elem s = 0; s < m; ++s)
      a.output[s] = (s & final_mask) ? 1 : 0;
    for (Elem s = 0; s < m; ++s) {
      std::string name = "{";
      bool first = true;
      for (Elem q = 0; q < n; ++q)
        if (s & (Elem{1} << q)) {
          name += (first ? "" : ",") + base_name(q);
          first = false;
        }
      a.state_names.push_back(name + "}");
    }
    return a;
  }

  case VarietyTag::Vect: {
    const unsigned p = target.prime();
    const std::size_t m = checked_power(p, n, "lift to VECT");
    auto digits = [&](Elem x) {
      std::vector<unsigned> d(n);
      for (std::size_t q = 0; q < n; ++q) {
        d[q] = x % p;
        x /= p;
      }
      return d;
    };
    auto encode = [&](const std::vector<unsigned> &d) {
      Elem x = 0;
      for (std::size_t q = n; q-- > 0;)
        x = x * p + d[q];
      return x;
    };
    std::vector<std::vector<unsigned>> coords(m);
    for (Elem x = 0; x < m; ++x)
      coords[x] = digits(x);
    a.states = tabulate(
        target, m, Elem{0},
        [&](std::size_t c, Elem x) {
          auto d = coords[x];
          for (auto &di : d)
            di = static_cast<unsigned>((di * c) % p);
          return encode(d);
        },
        [&](Elem x, Elem y) {
          auto d = coords[x];
          for (std::size_t q = 0; q < n; ++q)
            d[q] = (d[q] + coords[y][q]) % p;
          return encode(d);
        });
    a.delta.assign(letters, std::vector<Elem>(m));
    for (std::size_t l = 0; l < letters; ++l)
      for (Elem x = 0; x < m; ++x) {
        std::vector<unsigned> image(n, 0);
        for (std::size_t q = 0; q < n; ++q)
          image[classical.delta[l][q]] = (image[classical.delta[l][q]] + coords[x][q]) % p;
        a.delta[l][x] = encode(image);
      }
    std::vector<unsigned> init(n, 0);
    init[classical.initial] = 1;
    a.initial = encode(init);
    a.output.resize(m);
    for (Elem x = 0; x < m; ++x) {
      unsigned sum = 0;
      for (std::size_t q = 0; q < n; ++q)
        if (classical.output[q] == 1)
          sum += coords[x][q];
      a.output[x] = sum % p;
    }
    for (Elem x = 0; x < m; ++x) {
      std::string name;
      for (std::size_t q = 0; q < n; ++q) {
        if (coords[x][q] == 0)
          continue;
        if (!name.empty())
          name += "+";
        if (coords[x][q] != 1)
          name += std::to_string(coords[x][q]) + "*";
        name += base_name(static_cast<Elem>(q));
      }
      a.state_names.push_back(name.empty() ? "0" : name);
    }
    return a;
  }
  }
  return a;
}

DAutomaton random_automaton(const Variety &v, std::size_t n_base_states, const Alphabet &alphabet,
                            std::uint64_t seed) {
  if (n_base_states == 0)
    throw InputError("random_automaton needs at least one base state");
  // Raw mt19937_64 output with modulo keeps instances identical across standard libraries.
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Elem>(n_base_states);
  std::vector<std::vector<Elem>> delta(alphabet.size(), std::vector<Elem>(n));
  for (auto &row : delta)
    for (auto &q : row)
      q = static_cast<Elem>(rng() % n);
  std::vector<bool> final(n);
  for (Elem q = 0; q < n; ++q)
    final[q] = (rng() & 1) != 0;
  const auto initial = static_cast<Elem>(rng() % n);
  DAutomaton dfa = make_dfa(alphabet, delta, initial, final);
  if (v.tag() == VarietyTag::Set)
    return dfa;
  return lift_automaton(dfa, v);
}

} // namespace synalg
