#include "synalg/minimize.hpp"

#include "synalg/error.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace synalg {

namespace {

constexpr Elem kAbsent = ~Elem{0};

struct Closure {
  std::vector<Elem> order;
  std::vector<FreeElement> witnesses;
};

// Same visiting discipline as generated_subalgebra: constant, seeds, then unary and binary
// closure in discovery order. Seeds are the word-reachable states in shortlex order.
Closure reach_closure(const DAutomaton &a) {
  const FiniteDObject &s = a.states;
  const std::size_t n = a.size();
  std::vector<Elem> bfs{a.initial};
  std::vector<Word> bfs_words{Word{}};
  std::vector<bool> seen(n, false);
  seen[a.initial] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t l = 0; l < a.delta.size(); ++l) {
      const Elem q = a.delta[l][bfs[i]];
      if (!seen[q]) {
        seen[q] = true;
        bfs.push_back(q);
        Word w = bfs_words[i];
        w.push_back(static_cast<std::uint8_t>(l));
        bfs_words.push_back(std::move(w));
      }
    }

  Closure c;
  std::vector<Elem> index(n, kAbsent);
  auto visit = [&](Elem q, auto &&witness) {
    if (index[q] == kAbsent) {
      index[q] = static_cast<Elem>(c.order.size());
      c.order.push_back(q);
      c.witnesses.push_back(witness());
    }
  };
  if (s.constant) {
    const Elem k = *s.constant;
    std::optional<FreeElement> word_witness;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      if (bfs[i] == k)
        word_witness = fm_embed_word(bfs_words[i], a.variety);
    visit(k, [&] { return word_witness ? *word_witness : fm_constant(a.variety); });
  }
  for (std::size_t i = 0; i < bfs.size(); ++i)
    visit(bfs[i], [&] { return fm_embed_word(bfs_words[i], a.variety); });
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    const Elem x = c.order[i];
    for (std::size_t k = 0; k < s.unary.size(); ++k)
      visit(s.op1(k, x), [&] { return fm_op1(k, c.witnesses[i]); });
    if (!s.binary.empty())
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem z = c.order[j];
        visit(s.op2(z, x), [&] { return fm_op2(c.witnesses[j], c.witnesses[i]); });
        visit(s.op2(x, z), [&] { return fm_op2(c.witnesses[i], c.witnesses[j]); });
      }
  }
  return c;
}

DAutomaton restrict_automaton(const DAutomaton &a, const std::vector<Elem> &order) {
  DAutomaton r;
  r.variety = a.variety;
  r.alphabet = a.alphabet;
  r.states = restrict_to(a.states, order).object;
  std::vector<Elem> index(a.size(), kAbsent);
  for (std::size_t i = 0; i < order.size(); ++i)
    index[order[i]] = static_cast<Elem>(i);
  r.delta.assign(a.delta.size(), std::vector<Elem>(order.size()));
  for (std::size_t l = 0; l < a.delta.size(); ++l)
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Elem target = index[a.delta[l][order[i]]];
      if (target == kAbsent)
        throw std::logic_error("reachable set is not closed under transitions");
      r.delta[l][i] = target;
    }
  r.initial = index[a.initial];
  r.output.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    r.output[i] = a.output[order[i]];
  if (!a.state_names.empty())
    for (Elem q : order)
      r.state_names.push_back(a.state_names[q]);
  return r;
}

bool same_tables(const DAutomaton &a, const DAutomaton &b) {
  return a.variety == b.variety && a.alphabet == b.alphabet && a.states == b.states &&
         a.delta == b.delta && a.initial == b.initial && a.output == b.output;
}

class IsoSearch {
public:
  IsoSearch(const DAutomaton &a, const DAutomaton &b) : a_(a), b_(b) {}

  std::optional<std::vector<Elem>> run() {
    std::vector<Elem> map(a_.size(), kAbsent), inv(b_.size(), kAbsent);
    std::deque<std::pair<Elem, Elem>> forced{{a_.initial, b_.initial}};
    if (a_.states.constant)
      forced.emplace_back(*a_.states.constant, *b_.states.constant);
    if (!propagate(map, inv, forced))
      return std::nullopt;
    return search(map, inv);
  }

private:
  bool propagate(std::vector<Elem> &map, std::vector<Elem> &inv,
                 std::deque<std::pair<Elem, Elem>> &queue) const {
    const FiniteDObject &sa = a_.states, &sb = b_.states;
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (map[x] != kAbsent || inv[y] != kAbsent) {
        if (map[x] != y || inv[y] != x)
          return false;
        continue;
      }
      if (a_.output[x] != b_.output[y])
        return false;
      map[x] = y;
      inv[y] = x;
      for (std::size_t l = 0; l < a_.delta.size(); ++l)
        queue.emplace_back(a_.delta[l][x], b_.delta[l][y]);
      for (std::size_t k = 0; k < sa.unary.size(); ++k)
        queue.emplace_back(sa.op1(k, x), sb.op1(k, y));
      if (!sa.binary.empty())
        for (Elem z = 0; z < a_.size(); ++z)
          if (map[z] != kAbsent) {
            queue.emplace_back(sa.op2(x, z), sb.op2(y, map[z]));
            queue.emplace_back(sa.op2(z, x), sb.op2(map[z], y));
          }
    }
    return true;
  }

  std::optional<std::vector<Elem>> search(const std::vector<Elem> &map,
                                          const std::vector<Elem> &inv) const {
    Elem x = kAbsent;
    for (Elem q = 0; q < a_.size(); ++q)
      if (map[q] == kAbsent) {
        x = q;
        break;
      }
    if (x == kAbsent)
      return verify(map) ? std::optional(map) : std::nullopt;
    for (Elem y = 0; y < b_.size(); ++y) {
      if (inv[y] != kAbsent || a_.output[x] != b_.output[y])
        continue;
      auto m2 = map;
      auto i2 = inv;
      std::deque<std::pair<Elem, Elem>> queue{{x, y}};
      if (!propagate(m2, i2, queue))
        continue;
      if (auto found = search(m2, i2))
        return found;
    }
    return std::nullopt;
  }

  bool verify(const std::vector<Elem> &map) const {
    if (map[a_.initial] != b_.initial)
      return false;
    for (std::size_t l = 0; l < a_.delta.size(); ++l)
      for (Elem q = 0; q < a_.size(); ++q)
        if (map[a_.delta[l][q]] != b_.delta[l][map[q]])
          return false;
    for (Elem q = 0; q < a_.size(); ++q)
      if (a_.output[q] != b_.output[map[q]])
        return false;
    return !homomorphism_defect(map, a_.states, b_.states);
  }

  const DAutomaton &a_;
  const DAutomaton &b_;
};

} // namespace

ReachablePart reachable_part(const DAutomaton &a) {
  Closure c = reach_closure(a);
  return {restrict_automaton(a, c.order), std::move(c.order)};
}

std::vector<std::optional<FreeElement>> state_witnesses(const DAutomaton &a) {
  Closure c = reach_closure(a);
  std::vector<std::optional<FreeElement>> out(a.size());
  for (std::size_t i = 0; i < c.order.size(); ++i)
    out[c.order[i]] = std::move(c.witnesses[i]);
  return out;
}

Partition observability_partition(const DAutomaton &a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> label(a.output.begin(), a.output.end());
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (Elem q = 0; q < n; ++q) {
      std::vector<std::size_t> key{label[q]};
      for (const auto &d : a.delta)
        key.push_back(label[d[q]]);
      next[q] = ids.emplace(std::move(key), ids.size()).first->second;
    }
    label = std::move(next);
    if (ids.size() == classes)
      break;
    classes = ids.size();
  }
  Partition p = Partition::from_labels(label);
  try {
    (void)quotient_by_partition(a.states, p, a.variety);
  } catch (const NotACongruence &e) {
    throw std::logic_error(std::string("observability kernel is not a congruence: ") + e.what());
  }
  return p;
}

Minimized minimize(const DAutomaton &a) {
  ReachablePart reach = reachable_part(a);
  const DAutomaton &r = reach.automaton;
  Partition p = observability_partition(r);
  Quotient q = quotient_by_partition(r.states, p, r.variety);

  DAutomaton m;
  m.variety = r.variety;
  m.alphabet = r.alphabet;
  m.states = q.object;
  const auto &blocks = p.blocks();
  m.delta.assign(r.delta.size(), std::vector<Elem>(blocks.size()));
  for (std::size_t l = 0; l < r.delta.size(); ++l)
    for (std::size_t b = 0; b < blocks.size(); ++b)
      m.delta[l][b] = q.projection[r.delta[l][blocks[b][0]]];
  m.initial = q.projection[r.initial];
  m.output.resize(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    m.output[b] = r.output[blocks[b][0]];
  if (!r.state_names.empty())
    for (const auto &block : blocks)
      m.state_names.push_back(r.state_names[block[0]]);

  Closure c = reach_closure(m);
  Minimized out;
  out.automaton = restrict_automaton(m, c.order);
  std::vector<Elem> position(blocks.size());
  for (std::size_t i = 0; i < c.order.size(); ++i)
    position[c.order[i]] = static_cast<Elem>(i);
  out.report.reachable_size = r.size();
  out.report.minimal_size = out.automaton.size();
  out.report.partition = std::move(p);
  out.report.projection.resize(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    out.report.projection[x] = position[q.projection[x]];
  out.report.witnesses = std::move(c.witnesses);
  return out;
}

std::optional<std::vector<Elem>> automaton_iso(const DAutomaton &a, const DAutomaton &b) {
  if (a.variety != b.variety || !(a.alphabet == b.alphabet) || a.size() != b.size())
    return std::nullopt;
  Closure ca = reach_closure(a);
  Closure cb = reach_closure(b);
  if (ca.order.size() != cb.order.size())
    return std::nullopt;
  if (ca.order.size() == a.size()) {
    if (!same_tables(restrict_automaton(a, ca.order), restrict_automaton(b, cb.order)))
      return std::nullopt;
    std::vector<Elem> map(a.size());
    for (std::size_t i = 0; i < ca.order.size(); ++i)
      map[ca.order[i]] = cb.order[i];
    return map;
  }
  return IsoSearch(a, b).run();
}

} // namespace synalg
