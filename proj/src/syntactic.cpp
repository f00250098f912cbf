#include "synalg/syntactic.hpp"

#include "synalg/error.hpp"
#include "synalg/minimize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace synalg {

namespace {

constexpr std::size_t kMaxRightContexts = std::size_t{1} << 20;

// Discovered elements keyed by some value (an endomap, an oracle signature). Names are kept
// as the name_less-least preimage seen so far.
template <class Key> class Registry {
public:
  explicit Registry(std::string what) : what_(std::move(what)) {}

  std::pair<Elem, bool> add(Key key, const FreeElement &name) {
    auto [it, inserted] = ids_.emplace(std::move(key), static_cast<Elem>(keys_.size()));
    if (inserted) {
      keys_.push_back(it->first);
      names_.push_back(name);
      check_size_guard(what_, keys_.size());
    } else if (name_less(name, names_[it->second])) {
      names_[it->second] = name;
    }
    return {it->second, inserted};
  }

  Elem find(const Key &key) const {
    auto it = ids_.find(key);
    if (it == ids_.end())
      throw std::logic_error(what_ + " is not closed");
    return it->second;
  }

  std::size_t size() const noexcept { return keys_.size(); }
  const Key &key(Elem x) const { return keys_[x]; }
  const FreeElement &name(Elem x) const { return names_[x]; }
  const std::vector<FreeElement> &names() const noexcept { return names_; }

private:
  std::string what_;
  std::map<Key, Elem> ids_;
  std::vector<Key> keys_;
  std::vector<FreeElement> names_;
};

struct Assembly {
  Variety variety;
  std::vector<FreeElement> names;
  Elem unit = 0;
  std::optional<Elem> constant;
  std::vector<Elem> letters;
  std::vector<Elem> f;
  std::function<Elem(Elem, Elem)> mult;
  std::function<Elem(std::size_t, Elem)> op1;
  std::function<Elem(Elem, Elem)> op2;
};

// Renumbers so the constant comes first and the rest follow name order, then tabulates.
RecognizingPair assemble(const Assembly &in) {
  const std::size_t n = in.names.size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    if (in.constant && (x == *in.constant || y == *in.constant))
      return x == *in.constant && y != *in.constant;
    return name_less(in.names[x], in.names[y]);
  });
  std::vector<Elem> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    pos[order[i]] = static_cast<Elem>(i);

  RecognizingPair out;
  FiniteDMonoid &m = out.monoid;
  m.carrier = tabulate(
      in.variety, n, in.constant ? std::optional<Elem>(pos[*in.constant]) : std::nullopt,
      [&](std::size_t k, Elem x) { return pos[in.op1(k, order[x])]; },
      [&](Elem x, Elem y) { return pos[in.op2(order[x], order[y])]; });
  m.mult.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      m.mult[x * n + y] = pos[in.mult(order[x], order[y])];
  m.unit = pos[in.unit];
  for (Elem x : order)
    m.names.push_back(in.names[x]);
  for (Elem l : in.letters)
    out.e_on_letters.push_back(pos[l]);
  for (Elem x : order)
    out.f.push_back(in.f[x]);
  return out;
}

FreeElement letter_element(std::size_t l, const Variety &v) {
  return fm_embed_word(Word{static_cast<std::uint8_t>(l)}, v);
}

} // namespace

std::string source_name(SyntacticSource s) {
  switch (s) {
  case SyntacticSource::TransitionOfMinimal:
    return "transition-of-minimal";
  case SyntacticSource::OracleQuotient:
    return "oracle-quotient";
  case SyntacticSource::Dual:
    return "dual";
  }
  return "?";
}

RecognizingPair transition_monoid(const DAutomaton &a) {
  const Variety &v = a.variety;
  const FiniteDObject &q = a.states;
  const std::size_t n = a.size();
  using Map = std::vector<Elem>;
  Registry<Map> reg("transition monoid");

  auto then_letter = [&](const Map &t, std::size_t l) {
    Map out(n);
    for (std::size_t s = 0; s < n; ++s)
      out[s] = a.delta[l][t[s]];
    return out;
  };
  auto pointwise1 = [&](std::size_t k, const Map &t) {
    Map out(n);
    for (std::size_t s = 0; s < n; ++s)
      out[s] = q.op1(k, t[s]);
    return out;
  };
  auto pointwise2 = [&](const Map &t, const Map &u) {
    Map out(n);
    for (std::size_t s = 0; s < n; ++s)
      out[s] = q.op2(t[s], u[s]);
    return out;
  };

  Map identity(n);
  std::iota(identity.begin(), identity.end(), Elem{0});
  const Elem unit = reg.add(identity, fm_unit(v)).first;
  std::optional<Elem> constant;
  if (q.constant)
    constant = reg.add(Map(n, *q.constant), fm_constant(v)).first;

  // Word-reachable maps first, so each gets its shortlex-least word as name.
  std::vector<Elem> queue{unit};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t l = 0; l < a.delta.size(); ++l) {
      const Elem x = queue[i];
      auto [id, fresh] = reg.add(then_letter(reg.key(x), l),
                                 fm_multiply(reg.name(x), letter_element(l, v), v));
      if (fresh)
        queue.push_back(id);
    }
  std::vector<Elem> letters;
  for (std::size_t l = 0; l < a.delta.size(); ++l)
    letters.push_back(reg.find(then_letter(identity, l)));

  // Joint closure under composition with generators and the pointwise operations.
  for (Elem i = 0; i < reg.size(); ++i) {
    for (std::size_t l = 0; l < a.delta.size(); ++l)
      reg.add(then_letter(reg.key(i), l), fm_multiply(reg.name(i), letter_element(l, v), v));
    for (std::size_t k = 0; k < q.unary.size(); ++k)
      reg.add(pointwise1(k, reg.key(i)), fm_op1(k, reg.name(i)));
    if (!q.binary.empty())
      for (Elem j = 0; j <= i; ++j) {
        reg.add(pointwise2(reg.key(j), reg.key(i)), fm_op2(reg.name(j), reg.name(i)));
        reg.add(pointwise2(reg.key(i), reg.key(j)), fm_op2(reg.name(i), reg.name(j)));
      }
  }
  for (Elem i = 0; i < reg.size(); ++i)
    if (!is_homomorphism(reg.key(i), q, q, v))
      throw std::logic_error("transition monoid member is not an endomorphism");

  Assembly in{v, reg.names(), unit, constant, letters, {}, {}, {}, {}};
  for (Elem i = 0; i < reg.size(); ++i)
    in.f.push_back(a.output[reg.key(i)[a.initial]]);
  in.mult = [&](Elem x, Elem y) {
    const Map &t = reg.key(x), &u = reg.key(y);
    Map out(n);
    for (std::size_t s = 0; s < n; ++s)
      out[s] = u[t[s]];
    return reg.find(out);
  };
  in.op1 = [&](std::size_t k, Elem x) { return reg.find(pointwise1(k, reg.key(x))); };
  in.op2 = [&](Elem x, Elem y) { return reg.find(pointwise2(reg.key(x), reg.key(y))); };
  return assemble(in);
}

SyntacticResult syntactic_monoid(const DAutomaton &a) {
  return {transition_monoid(minimize(a).automaton), SyntacticSource::TransitionOfMinimal};
}

SyntacticOracle::SyntacticOracle(const DAutomaton &a) : min_(minimize(a).automaton) {
  const std::size_t n = min_.size();
  const std::size_t k = min_.alphabet.size();

  std::vector<bool> seen(n, false);
  left_.push_back(min_.initial);
  seen[min_.initial] = true;
  for (std::size_t i = 0; i < left_.size(); ++i)
    for (const auto &d : min_.delta)
      if (!seen[d[left_[i]]]) {
        seen[d[left_[i]]] = true;
        left_.push_back(d[left_[i]]);
      }

  // Right contexts: every word of length < n.
  right_count_ = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len < n; ++len) {
    right_count_ += layer;
    if (right_count_ > kMaxRightContexts)
      throw SizeGuardExceeded("oracle right contexts", right_count_, kMaxRightContexts);
    layer *= k;
  }
  const auto words = words_up_to(k, n == 0 ? 0 : n - 1);
  std::map<std::vector<Elem>, std::size_t> ids;
  signature_.resize(n);
  for (Elem s = 0; s < n; ++s) {
    std::vector<Elem> sig;
    sig.reserve(words.size());
    for (const auto &y : words)
      sig.push_back(min_.output[run_from(min_, s, y)]);
    signature_[s] = ids.emplace(std::move(sig), ids.size()).first->second;
  }
}

std::vector<std::size_t> SyntacticOracle::key(const FreeElement &u) const {
  std::vector<std::size_t> out;
  out.reserve(left_.size());
  for (Elem p : left_)
    out.push_back(signature_[act(min_, p, u)]);
  return out;
}

bool SyntacticOracle::equivalent(const FreeElement &u, const FreeElement &w) const {
  return key(u) == key(w);
}

bool syntactic_equivalent(const DAutomaton &a, const FreeElement &u, const FreeElement &w) {
  if (u.variety() != a.variety || w.variety() != a.variety)
    throw VarietyMismatch("free elements must belong to the automaton's variety " +
                          a.variety.label());
  return SyntacticOracle(a).equivalent(u, w);
}

OraclePartition syntactic_partition_oracle(const DAutomaton &a, std::size_t max_len) {
  if (max_len > 6)
    throw InputError("oracle enumeration length must be at most 6");
  const SyntacticOracle oracle(a);
  OraclePartition out;
  out.elements = fm_enumerate(a.variety, a.alphabet, max_len);
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::size_t> labels;
  labels.reserve(out.elements.size());
  for (const auto &u : out.elements)
    labels.push_back(ids.emplace(oracle.key(u), ids.size()).first->second);
  out.partition = Partition::from_labels(labels);
  return out;
}

SyntacticResult syntactic_quotient_oracle(const DAutomaton &a) {
  const Variety &v = a.variety;
  const SyntacticOracle oracle(a);
  using Key = std::vector<std::size_t>;
  Registry<Key> reg("syntactic quotient");
  auto add = [&](const FreeElement &u) { return reg.add(oracle.key(u), u).first; };

  const Elem unit = add(fm_unit(v));
  std::optional<Elem> constant;
  if (v.has_constant())
    constant = add(fm_constant(v));
  std::vector<Elem> letters;
  for (std::size_t l = 0; l < a.alphabet.size(); ++l)
    letters.push_back(add(letter_element(l, v)));

  const std::size_t unary = v.unary_arity();
  for (Elem i = 0; i < reg.size(); ++i) {
    for (std::size_t l = 0; l < a.alphabet.size(); ++l)
      add(fm_multiply(reg.name(i), letter_element(l, v), v));
    for (std::size_t k = 0; k < unary; ++k)
      add(fm_op1(k, reg.name(i)));
    if (v.has_binary())
      for (Elem j = 0; j <= i; ++j) {
        add(fm_op2(reg.name(j), reg.name(i)));
        add(fm_op2(reg.name(i), reg.name(j)));
      }
  }

  auto cls = [&](const FreeElement &u) { return reg.find(oracle.key(u)); };
  Assembly in{v, reg.names(), unit, constant, letters, {}, {}, {}, {}};
  for (Elem i = 0; i < reg.size(); ++i)
    in.f.push_back(eval(oracle.minimal(), reg.name(i)));
  in.mult = [&](Elem x, Elem y) { return cls(fm_multiply(reg.name(x), reg.name(y), v)); };
  in.op1 = [&](std::size_t k, Elem x) { return cls(fm_op1(k, reg.name(x))); };
  in.op2 = [&](Elem x, Elem y) { return cls(fm_op2(reg.name(x), reg.name(y))); };
  return {assemble(in), SyntacticSource::OracleQuotient};
}

Factorization factor_through(const RecognizingPair &pair, const SyntacticResult &syn) {
  Factorization out;
  const FiniteDMonoid &m = pair.monoid;
  const FiniteDMonoid &s = syn.syn();
  if (m.carrier.variety != s.carrier.variety) {
    out.counterexample = "variety mismatch";
    return out;
  }
  if (pair.e_on_letters.size() != syn.pair.e_on_letters.size()) {
    out.counterexample = "alphabet size mismatch";
    return out;
  }
  std::vector<Elem> h(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    h[x] = monoid_eval(s, syn.pair.e_on_letters, m.names.at(x));

  auto fail = [&](std::string why) {
    out.counterexample = std::move(why);
    return out;
  };
  for (std::size_t l = 0; l < pair.e_on_letters.size(); ++l)
    if (h[pair.e_on_letters[l]] != syn.pair.e_on_letters[l])
      return fail("h(e(letter " + std::to_string(l) + ")) differs from e_L");
  if (h[m.unit] != s.unit)
    return fail("unit not preserved");
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (h[m.multiply(x, y)] != s.multiply(h[x], h[y]))
        return fail("h(" + std::to_string(x) + "*" + std::to_string(y) +
                    ") is not h(x)*h(y)");
  if (auto d = homomorphism_defect(h, m.carrier, s.carrier))
    return fail("not a morphism of the variety: " + *d);
  for (Elem x = 0; x < m.size(); ++x)
    if (pair.f.at(x) != syn.pair.f.at(h[x]))
      return fail("outputs disagree at element " + std::to_string(x));
  std::vector<bool> hit(s.size(), false);
  for (Elem y : h)
    hit[y] = true;
  out.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  out.h = std::move(h);
  return out;
}

} // namespace synalg
