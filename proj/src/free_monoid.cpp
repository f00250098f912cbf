#include "synalg/free_monoid.hpp"

#include "synalg/error.hpp"

#include <algorithm>
#include <tuple>

namespace synalg {

bool shortlex_less(const Word &a, const Word &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

Alphabet::Alphabet(std::vector<char> letters) : letters_(std::move(letters)) {
  if (letters_.empty())
    throw InputError("alphabet must contain at least one letter");
  if (letters_.size() > 64)
    throw InputError("alphabet too large");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const char c = letters_[i];
    if (c == '_' || c == '!' || c == '{' || c == '}' || c == ',' || c == '+' || c == '*' ||
        c == ' ' || c == '(' || c == ')' || c == '|' || c == '#' ||
        static_cast<unsigned char>(c) >= 0x80 || static_cast<unsigned char>(c) < 0x21)
      throw InputError(std::string("reserved character '") + c + "' cannot be a letter");
    for (std::size_t j = 0; j < i; ++j)
      if (letters_[j] == c)
        throw InputError(std::string("duplicate letter '") + c + "'");
  }
}

Alphabet Alphabet::from_string(std::string_view letters) {
  return Alphabet(std::vector<char>(letters.begin(), letters.end()));
}

int Alphabet::index_of(char c) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == c)
      return static_cast<int>(i);
  return -1;
}

Word Alphabet::parse_word(std::string_view text) const {
  if (text == "_" || text == "ε")
    return {};
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    const int idx = index_of(c);
    if (idx < 0)
      throw InputError(std::string("unknown letter '") + c + "'");
    w.push_back(static_cast<std::uint8_t>(idx));
  }
  return w;
}

std::string Alphabet::format(const Word &w) const {
  if (w.empty())
    return "ε";
  std::string out;
  out.reserve(w.size());
  for (auto l : w)
    out.push_back(letter(l));
  return out;
}

std::vector<Word> words_up_to(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t a = 0; a < k; ++a) {
        Word w = out[i];
        w.push_back(static_cast<std::uint8_t>(a));
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

FreeElement FreeElement::from_terms(const Variety &v, std::vector<Term> terms, bool complemented) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return shortlex_less(a.word, b.word); });
  std::vector<Term> merged;
  for (auto &t : terms) {
    if (!merged.empty() && merged.back().word == t.word) {
      switch (v.tag()) {
      case VarietyTag::Semilattice:
        break;
      case VarietyTag::Vect:
        merged.back().coeff = (merged.back().coeff + t.coeff) % v.prime();
        break;
      default:
        throw InputError("free " + v.label() + " element cannot repeat a word");
      }
    } else {
      merged.push_back(std::move(t));
      if (v.tag() == VarietyTag::Vect)
        merged.back().coeff %= v.prime();
    }
  }
  std::erase_if(merged, [](const Term &t) { return t.coeff == 0; });
  for (auto &t : merged) {
    if (v.tag() == VarietyTag::Semilattice)
      t.coeff = 1;
    else if (v.tag() != VarietyTag::Vect && t.coeff != 1)
      throw InputError("free " + v.label() + " element has a non-unit coefficient");
  }
  if (complemented && v.tag() != VarietyTag::Involution)
    throw InputError("complement is only defined for INVOLUTION");
  switch (v.tag()) {
  case VarietyTag::Set:
  case VarietyTag::Involution:
    if (merged.size() != 1)
      throw InputError("free " + v.label() + " element must be exactly one word");
    break;
  case VarietyTag::Pointed:
    if (merged.size() > 1)
      throw InputError("free POINTED element is a word or ⊥");
    break;
  default:
    break;
  }
  FreeElement out;
  out.variety_ = v;
  out.complemented_ = complemented;
  out.terms_ = std::move(merged);
  return out;
}

namespace {

std::size_t weight(const FreeElement &u) {
  if (u.terms().empty())
    return 1;
  std::size_t w = u.terms().size() - 1 + (u.complemented() ? 1 : 0);
  for (const auto &t : u.terms())
    w += std::max<std::size_t>(t.word.size(), 1) + (t.coeff != 1 ? 1 : 0);
  return w;
}

void require_variety(const FreeElement &u, const Variety &v) {
  if (u.variety() != v)
    throw VarietyMismatch("free element of " + u.variety().label() + " used as " + v.label());
}

void require_tag(const FreeElement &u, VarietyTag tag, const char *op) {
  if (u.variety().tag() != tag)
    throw VarietyMismatch(std::string(op) + " is not an operation of " + u.variety().label());
}

} // namespace

bool name_less(const FreeElement &a, const FreeElement &b) {
  const auto wa = weight(a), wb = weight(b);
  if (wa != wb)
    return wa < wb;
  if (a.is_plain_word() != b.is_plain_word())
    return a.is_plain_word();
  if (a.complemented() != b.complemented())
    return !a.complemented();
  const auto &ta = a.terms(), &tb = b.terms();
  if (ta.size() != tb.size())
    return ta.size() < tb.size();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].word != tb[i].word)
      return shortlex_less(ta[i].word, tb[i].word);
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff < tb[i].coeff;
  }
  return false;
}

FreeElement fm_unit(const Variety &v) {
  return FreeElement::from_terms(v, {Term{Word{}, 1}});
}

FreeElement fm_embed_word(const Word &w, const Variety &v) {
  return FreeElement::from_terms(v, {Term{w, 1}});
}

FreeElement fm_embed_word(std::string_view word, const Alphabet &alphabet, const Variety &v) {
  return fm_embed_word(alphabet.parse_word(word), v);
}

FreeElement fm_constant(const Variety &v) {
  if (!v.has_constant())
    throw VarietyMismatch(v.label() + " has no constant");
  return FreeElement::from_terms(v, {});
}

FreeElement fm_multiply(const FreeElement &u, const FreeElement &w, const Variety &v) {
  require_variety(u, v);
  require_variety(w, v);
  std::vector<Term> product;
  product.reserve(u.terms().size() * w.terms().size());
  const unsigned p = v.tag() == VarietyTag::Vect ? v.prime() : 0;
  for (const auto &x : u.terms())
    for (const auto &y : w.terms()) {
      Term t;
      t.word.reserve(x.word.size() + y.word.size());
      t.word.insert(t.word.end(), x.word.begin(), x.word.end());
      t.word.insert(t.word.end(), y.word.begin(), y.word.end());
      t.coeff = p ? (x.coeff * y.coeff) % p : 1;
      product.push_back(std::move(t));
    }
  return FreeElement::from_terms(v, std::move(product), u.complemented() != w.complemented());
}

FreeElement fm_complement(const FreeElement &u) {
  require_tag(u, VarietyTag::Involution, "complement");
  return FreeElement::from_terms(u.variety(), u.terms(), !u.complemented());
}

FreeElement fm_join(const FreeElement &u, const FreeElement &w) {
  require_tag(u, VarietyTag::Semilattice, "join");
  require_variety(w, u.variety());
  std::vector<Term> terms = u.terms();
  terms.insert(terms.end(), w.terms().begin(), w.terms().end());
  return FreeElement::from_terms(u.variety(), std::move(terms));
}

FreeElement fm_add(const FreeElement &u, const FreeElement &w) {
  require_tag(u, VarietyTag::Vect, "addition");
  require_variety(w, u.variety());
  std::vector<Term> terms = u.terms();
  terms.insert(terms.end(), w.terms().begin(), w.terms().end());
  return FreeElement::from_terms(u.variety(), std::move(terms));
}

FreeElement fm_scale(unsigned c, const FreeElement &u) {
  require_tag(u, VarietyTag::Vect, "scalar multiplication");
  std::vector<Term> terms = u.terms();
  for (auto &t : terms)
    t.coeff = (t.coeff * (c % u.variety().prime())) % u.variety().prime();
  return FreeElement::from_terms(u.variety(), std::move(terms));
}

FreeElement fm_op1(std::size_t k, const FreeElement &u) {
  if (u.variety().tag() == VarietyTag::Involution)
    return fm_complement(u);
  return fm_scale(static_cast<unsigned>(k), u);
}

FreeElement fm_op2(const FreeElement &u, const FreeElement &w) {
  if (u.variety().tag() == VarietyTag::Semilattice)
    return fm_join(u, w);
  return fm_add(u, w);
}

namespace {

// Index combinations of size r from n in lexicographic order.
template <class F> void for_each_combination(std::size_t n, std::size_t r, F &&f) {
  if (r > n)
    return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i)
    idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

std::vector<FreeElement> fm_enumerate(const Variety &v, const Alphabet &alphabet,
                                      std::size_t max_len) {
  const auto words = words_up_to(alphabet.size(), max_len);
  std::vector<FreeElement> out;
  for (const auto &w : words)
    out.push_back(fm_embed_word(w, v));
  switch (v.tag()) {
  case VarietyTag::Set:
    break;
  case VarietyTag::Pointed:
    out.push_back(fm_constant(v));
    break;
  case VarietyTag::Involution:
    for (const auto &w : words)
      out.push_back(FreeElement::from_terms(v, {Term{w, 1}}, true));
    break;
  case VarietyTag::Semilattice:
    for (std::size_t r = 2; r <= 3; ++r)
      for_each_combination(words.size(), r, [&](const std::vector<std::size_t> &idx) {
        std::vector<Term> terms;
        for (auto i : idx)
          terms.push_back(Term{words[i], 1});
        out.push_back(FreeElement::from_terms(v, std::move(terms)));
      });
    out.push_back(fm_constant(v));
    break;
  case VarietyTag::Vect: {
    const unsigned p = v.prime();
    // Coefficient 1 monomials are already present; add the other scalars.
    for (const auto &w : words)
      for (unsigned c = 2; c < p; ++c)
        out.push_back(FreeElement::from_terms(v, {Term{w, c}}));
    for (std::size_t r = 2; r <= 3; ++r)
      for_each_combination(words.size(), r, [&](const std::vector<std::size_t> &idx) {
        std::vector<unsigned> coeffs(r, 1);
        while (true) {
          std::vector<Term> terms;
          for (std::size_t i = 0; i < r; ++i)
            terms.push_back(Term{words[idx[i]], coeffs[i]});
          out.push_back(FreeElement::from_terms(v, std::move(terms)));
          std::size_t i = r;
          while (i > 0 && coeffs[i - 1] == p - 1)
            coeffs[--i] = 1;
          if (i == 0)
            break;
          ++coeffs[i - 1];
        }
      });
    out.push_back(fm_constant(v));
    break;
  }
  }
  return out;
}

std::string format_free(const FreeElement &u, const Alphabet &alphabet) {
  const Variety &v = u.variety();
  const auto &terms = u.terms();
  switch (v.tag()) {
  case VarietyTag::Set:
    return alphabet.format(terms[0].word);
  case VarietyTag::Pointed:
    return terms.empty() ? "bot" : alphabet.format(terms[0].word);
  case VarietyTag::Involution:
    return (u.complemented() ? "!" : "") + alphabet.format(terms[0].word);
  case VarietyTag::Semilattice: {
    if (terms.size() == 1)
      return alphabet.format(terms[0].word);
    std::string out = "{";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i)
        out += ",";
      out += alphabet.format(terms[i].word);
    }
    return out + "}";
  }
  case VarietyTag::Vect: {
    if (terms.empty())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i)
        out += " + ";
      if (terms[i].coeff != 1)
        out += std::to_string(terms[i].coeff) + "*";
      out += alphabet.format(terms[i].word);
    }
    return out;
  }
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return parts;
}

} // namespace

FreeElement parse_free(std::string_view text, const Alphabet &alphabet, const Variety &v) {
  text = trim(text);
  if (text.empty())
    throw InputError("empty free element");
  if (text == "bot" || text == "⊥") {
    if (v.tag() != VarietyTag::Pointed)
      throw InputError("⊥ is only an element of the free POINTED monoid");
    return fm_constant(v);
  }
  if (text.front() == '!') {
    if (v.tag() != VarietyTag::Involution)
      throw InputError("complement is only available for INVOLUTION");
    return fm_complement(fm_embed_word(trim(text.substr(1)), alphabet, v));
  }
  if (text.front() == '{') {
    if (v.tag() != VarietyTag::Semilattice)
      throw InputError("word sets are only available for SEMILATTICE");
    if (text.back() != '}')
      throw InputError("unterminated word set");
    const auto body = trim(text.substr(1, text.size() - 2));
    std::vector<Term> terms;
    if (!body.empty())
      for (auto part : split(body, ','))
        terms.push_back(Term{alphabet.parse_word(part), 1});
    return FreeElement::from_terms(v, std::move(terms));
  }
  if (v.tag() == VarietyTag::Vect) {
    if (text == "0" && alphabet.index_of('0') < 0)
      return fm_constant(v);
    std::vector<Term> terms;
    for (auto part : split(text, '+')) {
      unsigned coeff = 1;
      std::string_view word = part;
      if (const auto star = part.find('*'); star != std::string_view::npos) {
        const auto num = trim(part.substr(0, star));
        if (num.empty() || !std::all_of(num.begin(), num.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
          throw InputError("bad coefficient in '" + std::string(part) + "'");
        coeff = static_cast<unsigned>(std::stoul(std::string(num)) % v.prime());
        word = trim(part.substr(star + 1));
      }
      terms.push_back(Term{alphabet.parse_word(word), coeff});
    }
    return FreeElement::from_terms(v, std::move(terms));
  }
  return fm_embed_word(text, alphabet, v);
}

} // namespace synalg
