#include "synalg/duality.hpp"

#include "synalg/error.hpp"
#include "synalg/minimize.hpp"
#include "synalg/regex.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace synalg {

namespace {

using HandleKey = std::pair<std::vector<std::vector<Elem>>, std::vector<Elem>>;

HandleKey key_of(const RegularLanguageHandle &h) {
  std::vector<Elem> tail = h.dfa().output;
  tail.push_back(h.dfa().initial);
  return {h.dfa().delta, std::move(tail)};
}

void require_set(const DAutomaton &a) {
  if (a.variety != Variety::set())
    throw VarietyMismatch("language handles need a SET automaton, got " + a.variety.label());
}

class HandleSet {
public:
  void add(RegularLanguageHandle h) {
    if (seen_.insert(key_of(h)).second)
      items_.push_back(std::move(h));
  }
  std::vector<RegularLanguageHandle> take() { return std::move(items_); }

private:
  std::set<HandleKey> seen_;
  std::vector<RegularLanguageHandle> items_;
};

std::vector<Elem> reachable_states(const DAutomaton &a) {
  std::vector<Elem> order{a.initial};
  std::vector<bool> seen(a.size(), false);
  seen[a.initial] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto &d : a.delta)
      if (!seen[d[order[i]]]) {
        seen[d[order[i]]] = true;
        order.push_back(d[order[i]]);
      }
  return order;
}

std::vector<bool> finals_of(const DAutomaton &a) {
  std::vector<bool> out(a.size());
  for (Elem q = 0; q < a.size(); ++q)
    out[q] = a.output[q] == 1;
  return out;
}

// z -> z' with a·z ⊆ z', read off all pairs (δ_x(i), δ_{ax}(i)) of the product.
std::vector<std::vector<Elem>> dual_transitions(const LocalVariety &v) {
  const DAutomaton &p = v.product_dfa;
  const std::size_t atoms = v.atoms.size();
  const std::size_t n = p.size();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<std::vector<Elem>> out(p.delta.size(), std::vector<Elem>(atoms, kUnset));
  for (std::size_t a = 0; a < p.delta.size(); ++a) {
    std::vector<bool> seen(n * n, false);
    std::vector<std::pair<Elem, Elem>> queue{{p.initial, p.delta[a][p.initial]}};
    seen[static_cast<std::size_t>(p.initial) * n + p.delta[a][p.initial]] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto [s, t] = queue[i];
      const std::size_t z = v.atom_of_state[s];
      const auto zp = static_cast<Elem>(v.atom_of_state[t]);
      if (out[a][z] == kUnset)
        out[a][z] = zp;
      else if (out[a][z] != zp)
        throw NonFunctionalTransition(z, a);
      for (const auto &d : p.delta) {
        const Elem s2 = d[s], t2 = d[t];
        if (!seen[static_cast<std::size_t>(s2) * n + t2]) {
          seen[static_cast<std::size_t>(s2) * n + t2] = true;
          queue.emplace_back(s2, t2);
        }
      }
    }
    for (std::size_t z = 0; z < atoms; ++z)
      if (out[a][z] == kUnset)
        throw NonFunctionalTransition(z, a);
  }
  return out;
}

// Up to `per_state` shortlex-least words reaching each state.
std::vector<std::vector<Word>> reaching_words(const std::vector<std::vector<Elem>> &delta,
                                              std::size_t size, Elem initial,
                                              std::size_t per_state) {
  std::vector<std::vector<Word>> out(size);
  std::vector<std::pair<Elem, Word>> queue{{initial, Word{}}};
  out[initial].push_back(Word{});
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t a = 0; a < delta.size(); ++a) {
      const Elem q = delta[a][queue[i].first];
      if (out[q].size() >= per_state)
        continue;
      Word w = queue[i].second;
      w.push_back(static_cast<std::uint8_t>(a));
      out[q].push_back(w);
      queue.emplace_back(q, std::move(w));
    }
  return out;
}

Elem run_table(const std::vector<std::vector<Elem>> &delta, Elem from, const Word &w) {
  for (auto a : w)
    from = delta[a][from];
  return from;
}

} // namespace

RegularLanguageHandle RegularLanguageHandle::from_dfa(const DAutomaton &dfa) {
  require_set(dfa);
  RegularLanguageHandle h;
  h.dfa_ = minimize(dfa).automaton;
  h.dfa_.state_names.clear();
  return h;
}

RegularLanguageHandle RegularLanguageHandle::from_regex(std::string_view pattern,
                                                        const Alphabet &alphabet) {
  return from_dfa(regex_to_dfa(pattern, alphabet));
}

bool operator==(const RegularLanguageHandle &a, const RegularLanguageHandle &b) {
  return a.alphabet() == b.alphabet() && key_of(a) == key_of(b);
}

RegularLanguageHandle reverse(const RegularLanguageHandle &l) {
  const DAutomaton &a = l.dfa();
  Nfa nfa;
  nfa.letters = a.alphabet.size();
  for (Elem q = 0; q < a.size(); ++q)
    nfa.add_state();
  for (std::size_t c = 0; c < a.delta.size(); ++c)
    for (Elem q = 0; q < a.size(); ++q)
      nfa.next[a.delta[c][q]][c].push_back(q);
  for (Elem q = 0; q < a.size(); ++q)
    if (a.output[q] == 1)
      nfa.initial.push_back(q);
  nfa.final[a.initial] = true;
  return RegularLanguageHandle::from_dfa(determinize(nfa, a.alphabet));
}

std::vector<RegularLanguageHandle> left_derivatives(const RegularLanguageHandle &l) {
  HandleSet out;
  const DAutomaton &a = l.dfa();
  for (Elem p : reachable_states(a)) {
    DAutomaton d = a;
    d.initial = p;
    out.add(RegularLanguageHandle::from_dfa(d));
  }
  return out.take();
}

std::vector<RegularLanguageHandle> two_sided_derivatives(const RegularLanguageHandle &l) {
  const DAutomaton &a = l.dfa();
  // Final sets F_v of the right derivatives L v⁻¹: F_{av} = δ_a⁻¹(F_v).
  std::vector<std::vector<bool>> finals{finals_of(a)};
  std::set<std::vector<bool>> seen{finals.front()};
  for (std::size_t i = 0; i < finals.size(); ++i)
    for (const auto &d : a.delta) {
      std::vector<bool> f(a.size());
      for (Elem q = 0; q < a.size(); ++q)
        f[q] = finals[i][d[q]];
      if (seen.insert(f).second) {
        finals.push_back(std::move(f));
        check_size_guard("right derivative final sets", finals.size());
      }
    }
  HandleSet out;
  for (Elem p : reachable_states(a))
    for (const auto &f : finals)
      out.add(RegularLanguageHandle::from_dfa(make_dfa(a.alphabet, a.delta, p, f)));
  return out.take();
}

LocalVariety boolean_closure_atoms(const std::vector<RegularLanguageHandle> &gens) {
  if (gens.empty())
    throw InputError("at least one generator is required");
  const Alphabet &alphabet = gens.front().alphabet();
  for (const auto &g : gens)
    if (!(g.alphabet() == alphabet))
      throw InputError("generators use different alphabets");

  LocalVariety v;
  v.generators = gens;
  using Tuple = std::vector<Elem>;
  std::map<Tuple, Elem> ids;
  std::vector<Tuple> tuples;
  auto intern = [&](Tuple t) {
    auto [it, inserted] = ids.emplace(t, static_cast<Elem>(tuples.size()));
    if (inserted) {
      tuples.push_back(std::move(t));
      check_size_guard("product automaton", tuples.size());
    }
    return it->second;
  };
  Tuple start;
  for (const auto &g : gens)
    start.push_back(g.dfa().initial);
  intern(start);
  std::vector<std::vector<Elem>> delta(alphabet.size());
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      Tuple t(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g)
        t[g] = gens[g].dfa().delta[a][tuples[i][g]];
      const Elem id = intern(std::move(t));
      delta[a].push_back(id);
    }

  std::map<std::vector<bool>, std::size_t> atom_ids;
  std::vector<std::vector<bool>> vectors;
  for (const auto &t : tuples) {
    std::vector<bool> m(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
      m[g] = gens[g].dfa().output[t[g]] == 1;
    auto [it, inserted] = atom_ids.emplace(m, vectors.size());
    if (inserted)
      vectors.push_back(m);
    v.atom_of_state.push_back(it->second);
  }
  v.product_dfa = make_dfa(alphabet, delta, 0, std::vector<bool>(tuples.size(), false));
  for (std::size_t z = 0; z < vectors.size(); ++z) {
    std::vector<bool> in(tuples.size());
    for (std::size_t s = 0; s < tuples.size(); ++s)
      in[s] = v.atom_of_state[s] == z;
    v.atoms.push_back({vectors[z], RegularLanguageHandle::from_dfa(make_dfa(alphabet, delta, 0, in))});
  }
  return v;
}

DualAlgebra dual_algebra(const LocalVariety &v) {
  DualAlgebra d;
  d.alphabet = v.product_dfa.alphabet;
  d.size = v.atoms.size();
  d.initial = v.atom_of_state[v.product_dfa.initial];
  d.transitions = dual_transitions(v);
  const auto words = reaching_words(d.transitions, d.size, static_cast<Elem>(d.initial), 2);
  for (std::size_t z = 0; z < d.size; ++z) {
    if (words[z].empty())
      throw std::logic_error("atom " + std::to_string(z) + " is unreachable in the dual algebra");
    d.witnesses.push_back(words[z].front());
  }
  d.mult.resize(d.size * d.size);
  for (std::size_t z = 0; z < d.size; ++z)
    for (std::size_t z2 = 0; z2 < d.size; ++z2) {
      const Elem value = run_table(d.transitions, static_cast<Elem>(z), words[z2].front());
      for (const auto &w : words[z2])
        if (run_table(d.transitions, static_cast<Elem>(z), w) != value)
          throw std::logic_error("dual multiplication depends on the witness of atom " +
                                 std::to_string(z2));
      for (const auto &w : words[z])
        if (run_table(d.transitions, static_cast<Elem>(d.initial), w) != z)
          throw std::logic_error("witness does not reach its atom");
      d.mult[z * d.size + z2] = value;
    }
  return d;
}

RecognizingPair dual_pair(const DualAlgebra &d, const RegularLanguageHandle &l) {
  RecognizingPair out;
  FiniteDMonoid &m = out.monoid;
  m.carrier = FiniteDObject::set_of(d.size);
  m.mult = d.mult;
  m.unit = static_cast<Elem>(d.initial);
  for (const auto &w : d.witnesses) {
    m.names.push_back(fm_embed_word(w, Variety::set()));
    out.f.push_back(l.contains(w) ? 1 : 0);
  }
  for (const auto &row : d.transitions)
    out.e_on_letters.push_back(row[d.initial]);
  return out;
}

SyndualReport verify_syndual(const RegularLanguageHandle &l) {
  SyndualReport r;
  r.variety = boolean_closure_atoms(two_sided_derivatives(reverse(l)));
  r.algebra = dual_algebra(r.variety);
  r.dual = dual_pair(r.algebra, l);
  r.syntactic = syntactic_monoid(l.dfa());
  r.isomorphic = generator_isomorphism(r.dual, r.syntactic.pair).has_value();
  return r;
}

MindualReport verify_mindual(const RegularLanguageHandle &l) {
  MindualReport r;
  const LocalVariety v = boolean_closure_atoms(left_derivatives(reverse(l)));
  const auto delta = dual_transitions(v);
  const Elem initial = static_cast<Elem>(v.atom_of_state[v.product_dfa.initial]);
  const auto words = reaching_words(delta, v.atoms.size(), initial, 1);
  std::vector<bool> final(v.atoms.size(), false);
  for (std::size_t z = 0; z < v.atoms.size(); ++z)
    final[z] = !words[z].empty() && l.contains(words[z].front());
  r.dual_automaton = make_dfa(l.alphabet(), delta, initial, final);
  r.atom_count = v.atoms.size();
  const DAutomaton min = minimize(l.dfa()).automaton;
  r.minimal_states = min.size();
  r.isomorphic = r.atom_count == r.minimal_states &&
                 automaton_iso(r.dual_automaton, min).has_value();
  return r;
}

} // namespace synalg
