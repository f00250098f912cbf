#include "synalg/regex.hpp"

#include "synalg/error.hpp"
#include "synalg/minimize.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace synalg {

namespace {

constexpr std::string_view kEmptySetUtf8 = "\xE2\x88\x85";

class RegexParser {
public:
  RegexParser(std::string_view text, const Alphabet &alphabet) : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = parse_union();
    skip_spaces();
    if (pos_ < text_.size())
      throw ParseError(text_[pos_] == ')' ? "unbalanced ')'" : "unexpected character", pos_);
    return r;
  }

private:
  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ')
      ++pos_;
  }

  bool at(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Regex parse_union() {
    std::vector<Regex> alts;
    alts.push_back(parse_concat());
    while (at('|')) {
      ++pos_;
      alts.push_back(parse_concat());
    }
    if (alts.size() == 1)
      return std::move(alts.front());
    return Regex{Regex::Kind::Union, 0, std::move(alts)};
  }

  Regex parse_concat() {
    std::vector<Regex> items;
    while (true) {
      skip_spaces();
      if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')')
        break;
      items.push_back(parse_star());
    }
    if (items.empty())
      return Regex{Regex::Kind::Epsilon, 0, {}};
    if (items.size() == 1)
      return std::move(items.front());
    return Regex{Regex::Kind::Concat, 0, std::move(items)};
  }

  Regex parse_star() {
    Regex r = parse_atom();
    while (at('*')) {
      ++pos_;
      std::vector<Regex> child;
      child.push_back(std::move(r));
      r = Regex{Regex::Kind::Star, 0, std::move(child)};
    }
    return r;
  }

  Regex parse_atom() {
    skip_spaces();
    const std::size_t start = pos_;
    if (text_.substr(pos_, kEmptySetUtf8.size()) == kEmptySetUtf8) {
      pos_ += kEmptySetUtf8.size();
      return Regex{Regex::Kind::Empty, 0, {}};
    }
    const char c = text_[pos_];
    if (c == '#') {
      ++pos_;
      return Regex{Regex::Kind::Empty, 0, {}};
    }
    if (c == '(') {
      ++pos_;
      if (at(')')) {
        ++pos_;
        return Regex{Regex::Kind::Epsilon, 0, {}};
      }
      Regex inner = parse_union();
      if (!at(')'))
        throw ParseError("missing ')' for group opened", start);
      ++pos_;
      return inner;
    }
    if (c == '*')
      throw ParseError("'*' has nothing to repeat", pos_);
    const int idx = alphabet_.index_of(c);
    if (idx < 0)
      throw ParseError(std::string("letter '") + c + "' is not in the alphabet", pos_);
    ++pos_;
    return Regex{Regex::Kind::Literal, static_cast<std::uint8_t>(idx), {}};
  }

  std::string_view text_;
  const Alphabet &alphabet_;
  std::size_t pos_ = 0;
};

struct Fragment {
  Elem start;
  Elem accept;
};

Fragment build(const Regex &r, Nfa &nfa) {
  const Elem s = nfa.add_state();
  const Elem t = nfa.add_state();
  switch (r.kind) {
  case Regex::Kind::Empty:
    break;
  case Regex::Kind::Epsilon:
    nfa.epsilon[s].push_back(t);
    break;
  case Regex::Kind::Literal:
    nfa.next[s][r.letter].push_back(t);
    break;
  case Regex::Kind::Union:
    for (const auto &c : r.children) {
      const Fragment f = build(c, nfa);
      nfa.epsilon[s].push_back(f.start);
      nfa.epsilon[f.accept].push_back(t);
    }
    break;
  case Regex::Kind::Concat: {
    Elem prev = s;
    for (const auto &c : r.children) {
      const Fragment f = build(c, nfa);
      nfa.epsilon[prev].push_back(f.start);
      prev = f.accept;
    }
    nfa.epsilon[prev].push_back(t);
    break;
  }
  case Regex::Kind::Star: {
    const Fragment f = build(r.children.at(0), nfa);
    nfa.epsilon[s].push_back(f.start);
    nfa.epsilon[s].push_back(t);
    nfa.epsilon[f.accept].push_back(f.start);
    nfa.epsilon[f.accept].push_back(t);
    break;
  }
  }
  return {s, t};
}

std::vector<Elem> closure(const Nfa &nfa, std::vector<Elem> set) {
  std::vector<bool> in(nfa.next.size(), false);
  for (Elem q : set)
    in[q] = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (Elem r : nfa.epsilon[set[i]])
      if (!in[r]) {
        in[r] = true;
        set.push_back(r);
      }
  std::sort(set.begin(), set.end());
  return set;
}

} // namespace

Regex parse_regex(std::string_view pattern, const Alphabet &alphabet) {
  return RegexParser(pattern, alphabet).parse();
}

Elem Nfa::add_state() {
  next.emplace_back(letters);
  epsilon.emplace_back();
  final.push_back(false);
  return static_cast<Elem>(next.size() - 1);
}

Nfa thompson(const Regex &r, std::size_t letters) {
  Nfa nfa;
  nfa.letters = letters;
  const Fragment f = build(r, nfa);
  nfa.initial = {f.start};
  nfa.final[f.accept] = true;
  return nfa;
}

DAutomaton determinize(const Nfa &nfa, const Alphabet &alphabet) {
  if (nfa.letters != alphabet.size())
    throw InputError("NFA letter count does not match the alphabet");
  std::map<std::vector<Elem>, Elem> ids;
  std::vector<std::vector<Elem>> subsets;
  auto intern = [&](std::vector<Elem> set) {
    auto [it, inserted] = ids.emplace(set, static_cast<Elem>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(set));
      check_size_guard("subset construction", subsets.size());
    }
    return it->second;
  };
  const Elem start = intern(closure(nfa, nfa.initial));
  std::vector<std::vector<Elem>> delta(alphabet.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::vector<Elem> target;
      for (Elem q : subsets[i])
        target.insert(target.end(), nfa.next[q][a].begin(), nfa.next[q][a].end());
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      const Elem id = intern(closure(nfa, std::move(target)));
      delta[a].push_back(id);
    }
  }
  std::vector<bool> final(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    final[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                           [&](Elem q) { return nfa.final[q]; });
  return make_dfa(alphabet, delta, start, final);
}

DAutomaton regex_to_dfa_raw(std::string_view pattern, const Alphabet &alphabet) {
  const Regex r = parse_regex(pattern, alphabet);
  return determinize(thompson(r, alphabet.size()), alphabet);
}

DAutomaton regex_to_dfa(std::string_view pattern, const Alphabet &alphabet) {
  return minimize(regex_to_dfa_raw(pattern, alphabet)).automaton;
}

} // namespace synalg
