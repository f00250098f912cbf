#include "synalg/io.hpp"

#include "synalg/error.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace synalg {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string escape_pointer(const std::string &key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string child(const std::string &ptr, const std::string &key) {
  return ptr + "/" + escape_pointer(key);
}

std::string child(const std::string &ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json &require_field(const json &obj, const std::string &ptr, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(child(ptr, key), "missing field");
  return *it;
}

void only_fields(const json &obj, const std::string &ptr, std::initializer_list<const char *> keys) {
  if (!obj.is_object())
    throw SchemaError(ptr, "expected an object");
  for (const auto &[key, value] : obj.items()) {
    bool known = false;
    for (const char *k : keys)
      known = known || key == k;
    if (!known)
      throw SchemaError(child(ptr, key), "unknown field");
  }
}

std::string require_string(const json &j, const std::string &ptr) {
  if (!j.is_string())
    throw SchemaError(ptr, "expected a string");
  return j.get<std::string>();
}

class StateTable {
public:
  StateTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      ids_[names_[i]] = static_cast<Elem>(i);
  }

  Elem lookup(const json &j, const std::string &ptr) const {
    const std::string name = require_string(j, ptr);
    auto it = ids_.find(name);
    if (it == ids_.end())
      throw SchemaError(ptr, "unknown state \"" + name + "\"");
    return it->second;
  }

  /// An object with exactly one entry per state, mapped through `value`.
  template <class F> std::vector<Elem> per_state(const json &obj, const std::string &ptr, F &&value) const {
    if (!obj.is_object())
      throw SchemaError(ptr, "expected an object keyed by state");
    std::vector<Elem> out(names_.size());
    std::vector<bool> seen(names_.size(), false);
    for (const auto &[key, v] : obj.items()) {
      auto it = ids_.find(key);
      if (it == ids_.end())
        throw SchemaError(child(ptr, key), "unknown state");
      seen[it->second] = true;
      out[it->second] = value(v, child(ptr, key));
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!seen[i])
        throw SchemaError(child(ptr, names_[i]), "missing entry for state");
    return out;
  }

  /// An array with one state name per state (in file order).
  std::vector<Elem> row(const json &arr, const std::string &ptr) const {
    if (!arr.is_array() || arr.size() != names_.size())
      throw SchemaError(ptr, "expected an array of " + std::to_string(names_.size()) + " states");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(lookup(arr[i], child(ptr, i)));
    return out;
  }

  std::vector<std::vector<Elem>> square(const json &arr, const std::string &ptr) const {
    if (!arr.is_array() || arr.size() != names_.size())
      throw SchemaError(ptr, "expected " + std::to_string(names_.size()) + " rows");
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(row(arr[i], child(ptr, i)));
    return out;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string> &names() const noexcept { return names_; }

private:
  std::vector<std::string> names_;
  std::map<std::string, Elem> ids_;
};

std::vector<Elem> flatten(const std::vector<std::vector<Elem>> &rows) {
  std::vector<Elem> out;
  for (const auto &r : rows)
    out.insert(out.end(), r.begin(), r.end());
  return out;
}

DAutomaton from_json(const json &root) {
  only_fields(root, "", {"variety", "p", "alphabet", "states", "ops", "initial", "delta", "output"});

  const std::string vname = require_string(require_field(root, "", "variety"), "/variety");
  Variety v = Variety::set();
  if (vname == "vect") {
    const json &p = require_field(root, "", "p");
    if (!p.is_number_unsigned())
      throw SchemaError("/p", "expected a prime");
    try {
      v = Variety::vect(p.get<unsigned>());
    } catch (const InputError &e) {
      throw SchemaError("/p", e.what());
    }
  } else {
    if (root.contains("p"))
      throw SchemaError("/p", "only vect automata take a field size");
    try {
      v = Variety::from_name(vname);
    } catch (const InputError &e) {
      throw SchemaError("/variety", e.what());
    }
  }

  const json &alpha = require_field(root, "", "alphabet");
  if (!alpha.is_array() || alpha.empty())
    throw SchemaError("/alphabet", "expected a nonempty array of letters");
  std::vector<char> letters;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const std::string s = require_string(alpha[i], child("/alphabet", i));
    if (s.size() != 1)
      throw SchemaError(child("/alphabet", i), "letters are single characters");
    letters.push_back(s[0]);
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(letters);
  } catch (const InputError &e) {
    throw SchemaError("/alphabet", e.what());
  }

  const json &states = require_field(root, "", "states");
  if (!states.is_array() || states.empty())
    throw SchemaError("/states", "expected a nonempty array of state names");
  std::vector<std::string> file_names;
  std::set<std::string> unique;
  for (std::size_t i = 0; i < states.size(); ++i) {
    file_names.push_back(require_string(states[i], child("/states", i)));
    if (!unique.insert(file_names.back()).second)
      throw SchemaError(child("/states", i), "duplicate state name");
  }
  const StateTable file_table(file_names);

  const json empty_ops = json::object();
  const json *ops = &empty_ops;
  if (v.tag() == VarietyTag::Set) {
    if (root.contains("ops"))
      throw SchemaError("/ops", "set automata carry no operations");
  } else {
    ops = &require_field(root, "", "ops");
  }

  // Pointed automata keep the basepoint at id 0; other files keep their state order.
  std::vector<std::string> names = file_names;
  if (v.tag() == VarietyTag::Pointed) {
    only_fields(*ops, "/ops", {"basepoint"});
    const Elem bp = file_table.lookup(require_field(*ops, "/ops", "basepoint"), "/ops/basepoint");
    names.erase(names.begin() + bp);
    names.insert(names.begin(), file_names[bp]);
  }
  const StateTable table(names);
  const std::size_t n = table.size();

  DAutomaton a;
  a.variety = v;
  a.alphabet = alphabet;
  a.state_names = names;
  a.states.variety = v;
  a.states.size = n;
  switch (v.tag()) {
  case VarietyTag::Set:
    break;
  case VarietyTag::Pointed:
    a.states.constant = 0;
    break;
  case VarietyTag::Involution:
    only_fields(*ops, "/ops", {"complement"});
    a.states.unary.push_back(table.per_state(
        require_field(*ops, "/ops", "complement"), "/ops/complement",
        [&](const json &j, const std::string &ptr) { return table.lookup(j, ptr); }));
    break;
  case VarietyTag::Semilattice:
    only_fields(*ops, "/ops", {"bottom", "join"});
    a.states.constant = table.lookup(require_field(*ops, "/ops", "bottom"), "/ops/bottom");
    a.states.binary = flatten(table.square(require_field(*ops, "/ops", "join"), "/ops/join"));
    break;
  case VarietyTag::Vect: {
    only_fields(*ops, "/ops", {"zero", "add", "scale"});
    a.states.constant = table.lookup(require_field(*ops, "/ops", "zero"), "/ops/zero");
    a.states.binary = flatten(table.square(require_field(*ops, "/ops", "add"), "/ops/add"));
    const json &scale = require_field(*ops, "/ops", "scale");
    if (!scale.is_array() || scale.size() != v.prime())
      throw SchemaError("/ops/scale", "expected one row per scalar 0.." + std::to_string(v.prime() - 1));
    for (std::size_t c = 0; c < scale.size(); ++c)
      a.states.unary.push_back(table.row(scale[c], child("/ops/scale", c)));
    break;
  }
  }

  a.initial = table.lookup(require_field(root, "", "initial"), "/initial");

  const json &delta = require_field(root, "", "delta");
  if (!delta.is_object())
    throw SchemaError("/delta", "expected an object keyed by letter");
  for (const auto &[key, value] : delta.items())
    if (key.size() != 1 || alphabet.index_of(key[0]) < 0)
      throw SchemaError(child("/delta", key), "not a letter of the alphabet");
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    const std::string key(1, alphabet.letter(l));
    if (!delta.contains(key))
      throw SchemaError(child("/delta", key), "missing transitions for letter");
    a.delta.push_back(table.per_state(
        delta.at(key), child("/delta", key),
        [&](const json &j, const std::string &ptr) { return table.lookup(j, ptr); }));
  }

  a.output = table.per_state(require_field(root, "", "output"), "/output",
                             [&](const json &j, const std::string &ptr) {
                               const std::string s = require_string(j, ptr);
                               auto y = v.parse_output(s);
                               if (!y)
                                 throw SchemaError(ptr, "\"" + s + "\" is not an element of Y for " +
                                                            v.label());
                               return *y;
                             });
  require_valid(a);
  return a;
}

std::vector<std::string> emitted_names(const DAutomaton &a) {
  std::set<std::string> seen;
  bool unique = a.state_names.size() == a.size();
  for (const auto &s : a.state_names)
    unique = unique && !s.empty() && seen.insert(s).second;
  std::vector<std::string> out;
  for (Elem q = 0; q < a.size(); ++q)
    out.push_back(unique ? a.state_names[q] : "q" + std::to_string(q));
  return out;
}

std::size_t display_width(const std::string &s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    w += (c & 0xC0) != 0x80;
  return w;
}

std::string pad(const std::string &s, std::size_t width) {
  const std::size_t w = display_width(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

} // namespace

DAutomaton parse_automaton(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return from_json(root);
}

DAutomaton parse_automaton_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_automaton(ss.str());
}

std::string emit_automaton(const DAutomaton &a) {
  const auto names = emitted_names(a);
  const Variety &v = a.variety;
  ojson root;
  root["variety"] = v.name();
  if (v.tag() == VarietyTag::Vect)
    root["p"] = v.prime();
  root["alphabet"] = ojson::array();
  for (char c : a.alphabet.letters())
    root["alphabet"].push_back(std::string(1, c));
  root["states"] = names;
  auto row = [&](const std::vector<Elem> &r) {
    ojson out = ojson::array();
    for (Elem x : r)
      out.push_back(names[x]);
    return out;
  };
  auto square = [&]() {
    ojson out = ojson::array();
    for (Elem x = 0; x < a.size(); ++x) {
      ojson r = ojson::array();
      for (Elem y = 0; y < a.size(); ++y)
        r.push_back(names[a.states.op2(x, y)]);
      out.push_back(r);
    }
    return out;
  };
  switch (v.tag()) {
  case VarietyTag::Set:
    break;
  case VarietyTag::Pointed:
    root["ops"] = {{"basepoint", names[*a.states.constant]}};
    break;
  case VarietyTag::Involution: {
    ojson comp = ojson::object();
    for (Elem q = 0; q < a.size(); ++q)
      comp[names[q]] = names[a.states.complement(q)];
    root["ops"] = {{"complement", comp}};
    break;
  }
  case VarietyTag::Semilattice:
    root["ops"] = {{"bottom", names[*a.states.constant]}, {"join", square()}};
    break;
  case VarietyTag::Vect: {
    ojson scale = ojson::array();
    for (const auto &r : a.states.unary)
      scale.push_back(row(r));
    root["ops"] = {{"zero", names[*a.states.constant]}, {"add", square()}, {"scale", scale}};
    break;
  }
  }
  root["initial"] = names[a.initial];
  ojson delta = ojson::object();
  for (std::size_t l = 0; l < a.delta.size(); ++l) {
    ojson d = ojson::object();
    for (Elem q = 0; q < a.size(); ++q)
      d[names[q]] = names[a.delta[l][q]];
    delta[std::string(1, a.alphabet.letter(l))] = d;
  }
  root["delta"] = delta;
  ojson out = ojson::object();
  for (Elem q = 0; q < a.size(); ++q)
    out[names[q]] = v.format_output(a.output[q]);
  root["output"] = out;
  return root.dump(2) + "\n";
}

MonoidFormat parse_monoid_format(const std::string &name) {
  if (name == "table")
    return MonoidFormat::Table;
  if (name == "json")
    return MonoidFormat::Json;
  throw InputError("unknown output format '" + name + "' (expected table or json)");
}

std::string emit_monoid(const RecognizingPair &pair, const Alphabet &alphabet,
                        MonoidFormat format) {
  const FiniteDMonoid &m = pair.monoid;
  const FiniteDObject &c = m.carrier;
  const Variety &v = c.variety;
  const std::size_t n = m.size();
  std::vector<std::string> names;
  for (const auto &u : m.names)
    names.push_back(format_free(u, alphabet));
  std::vector<Violation> laws = monoid_validate(m, v);
  for (auto &x : pair_validate(pair))
    laws.push_back(std::move(x));

  if (format == MonoidFormat::Json) {
    ojson root;
    root["variety"] = v.name();
    if (v.tag() == VarietyTag::Vect)
      root["p"] = v.prime();
    root["size"] = n;
    root["elements"] = names;
    root["unit"] = names[m.unit];
    if (c.constant)
      root["constant"] = names[*c.constant];
    ojson gens = ojson::object();
    for (std::size_t l = 0; l < pair.e_on_letters.size(); ++l)
      gens[std::string(1, alphabet.letter(l))] = names[pair.e_on_letters[l]];
    root["generators"] = gens;
    ojson mult = ojson::array();
    for (Elem x = 0; x < n; ++x) {
      ojson r = ojson::array();
      for (Elem y = 0; y < n; ++y)
        r.push_back(names[m.multiply(x, y)]);
      mult.push_back(r);
    }
    root["mult"] = mult;
    if (!c.unary.empty()) {
      ojson unary = ojson::array();
      for (const auto &t : c.unary) {
        ojson r = ojson::array();
        for (Elem x : t)
          r.push_back(names[x]);
        unary.push_back(r);
      }
      root[v.tag() == VarietyTag::Involution ? "complement" : "scale"] = unary;
    }
    if (!c.binary.empty()) {
      ojson bin = ojson::array();
      for (Elem x = 0; x < n; ++x) {
        ojson r = ojson::array();
        for (Elem y = 0; y < n; ++y)
          r.push_back(names[c.op2(x, y)]);
        bin.push_back(r);
      }
      root[v.tag() == VarietyTag::Semilattice ? "join" : "add"] = bin;
    }
    ojson f = ojson::object();
    for (Elem x = 0; x < n; ++x)
      f[names[x]] = v.format_output(pair.f[x]);
    root["f"] = f;
    ojson violations = ojson::array();
    for (const auto &x : laws)
      violations.push_back(describe(x));
    root["laws"] = {{"ok", laws.empty()}, {"violations", violations}};
    return root.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "variety: " << v.label() << "\n";
  out << "elements: " << n << "\n";
  out << "unit: " << names[m.unit] << "\n";
  if (c.constant)
    out << "constant: " << names[*c.constant] << "\n";
  out << "generators:";
  for (std::size_t l = 0; l < pair.e_on_letters.size(); ++l)
    out << " " << alphabet.letter(l) << "->" << names[pair.e_on_letters[l]];
  out << "\n";

  std::size_t width = 1;
  for (const auto &s : names)
    width = std::max(width, display_width(s) + 2);
  auto bracket = [](const std::string &s) { return "[" + s + "]"; };
  auto print_table = [&](const std::string &title, auto &&cell) {
    out << "\n" << pad(title, width) << " |";
    for (Elem y = 0; y < n; ++y)
      out << " " << pad(bracket(names[y]), width);
    out << "\n" << std::string(width + 2 + n * (width + 1), '-') << "\n";
    for (Elem x = 0; x < n; ++x) {
      out << pad(bracket(names[x]), width) << " |";
      for (Elem y = 0; y < n; ++y)
        out << " " << pad(bracket(names[cell(x, y)]), width);
      out << "\n";
    }
  };
  print_table("*", [&](Elem x, Elem y) { return m.multiply(x, y); });
  if (!c.binary.empty())
    print_table(v.tag() == VarietyTag::Semilattice ? "join" : "+",
                [&](Elem x, Elem y) { return c.op2(x, y); });
  if (v.tag() == VarietyTag::Involution) {
    out << "\ncomplement:";
    for (Elem x = 0; x < n; ++x)
      out << " " << bracket(names[x]) << "->" << bracket(names[c.complement(x)]);
    out << "\n";
  }
  out << "\nf:";
  for (Elem x = 0; x < n; ++x)
    out << " " << bracket(names[x]) << "=" << v.format_output(pair.f[x]);
  out << "\n";
  out << "laws: " << (laws.empty() ? "ok" : std::to_string(laws.size()) + " violation(s)") << "\n";
  for (const auto &x : laws)
    out << "  " << describe(x) << "\n";
  return out.str();
}

std::string emit_minimization_report(const MinimizationReport &report, const Alphabet &alphabet) {
  ojson root;
  root["reachable_size"] = report.reachable_size;
  root["minimal_size"] = report.minimal_size;
  ojson blocks = ojson::array();
  for (const auto &b : report.partition.blocks())
    blocks.push_back(b);
  root["partition"] = blocks;
  root["projection"] = report.projection;
  ojson witnesses = ojson::array();
  for (const auto &w : report.witnesses)
    witnesses.push_back(format_free(w, alphabet));
  root["witnesses"] = witnesses;
  return root.dump(2) + "\n";
}

std::string emit_oracle_partition(const OraclePartition &p, const Alphabet &alphabet) {
  std::ostringstream out;
  out << "classes: " << p.partition.block_count() << " over " << p.elements.size()
      << " enumerated elements\n";
  const auto &blocks = p.partition.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out << "class " << b << " (" << blocks[b].size() << "):";
    const std::size_t shown = std::min<std::size_t>(blocks[b].size(), 12);
    for (std::size_t i = 0; i < shown; ++i)
      out << " " << format_free(p.elements[blocks[b][i]], alphabet);
    if (shown < blocks[b].size())
      out << " ...";
    out << "\n";
  }
  return out.str();
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write " + path);
  out << text;
  if (!out)
    throw IoError("failed writing " + path);
}

} // namespace synalg
