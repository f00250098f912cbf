#include "synalg/checks.hpp"

#include "synalg/duality.hpp"
#include "synalg/error.hpp"
#include "synalg/io.hpp"
#include "synalg/minimize.hpp"
#include "synalg/syntactic.hpp"

#include <filesystem>
#include <map>
#include <random>
#include <sstream>

namespace synalg {

namespace {

Variety variety_of(VarietyTag tag, unsigned p) {
  switch (tag) {
  case VarietyTag::Set:
    return Variety::set();
  case VarietyTag::Pointed:
    return Variety::pointed();
  case VarietyTag::Involution:
    return Variety::involution();
  case VarietyTag::Semilattice:
    return Variety::semilattice();
  case VarietyTag::Vect:
    return Variety::vect(p);
  }
  return Variety::set();
}

std::string pair_mismatch(const RecognizingPair &pair, const DAutomaton &a,
                          const std::vector<FreeElement> &elements, const char *what) {
  for (const auto &u : elements)
    if (pair_eval(pair, u) != eval(a, u))
      return std::string(what) + " disagrees with the automaton on " +
             format_free(u, a.alphabet);
  return {};
}

} // namespace

std::string check_name(CheckKind k) {
  switch (k) {
  case CheckKind::TranEqOracle:
    return "tran-eq-oracle";
  case CheckKind::UniversalProperty:
    return "universal-property";
  case CheckKind::Duality:
    return "duality";
  case CheckKind::MinimizeIdempotent:
    return "minimize-idempotent";
  case CheckKind::Recognition:
    return "recognition";
  }
  return "?";
}

CheckKind check_from_name(const std::string &name) {
  for (CheckKind k : all_checks())
    if (check_name(k) == name)
      return k;
  throw ConfigError("unknown check '" + name + "'");
}

std::vector<CheckKind> all_checks() {
  return {CheckKind::TranEqOracle, CheckKind::UniversalProperty, CheckKind::Duality,
          CheckKind::MinimizeIdempotent, CheckKind::Recognition};
}

void validate_config(const CheckConfig &cfg) {
  if (cfg.instance_count < 1)
    throw ConfigError("instance_count must be at least 1");
  if (cfg.max_base_states < 1 || cfg.max_base_states > 5)
    throw ConfigError("max_base_states must be between 1 and 5");
  if (cfg.alphabet_size < 1 || cfg.alphabet_size > 4)
    throw ConfigError("alphabet_size must be between 1 and 4");
  if (cfg.varieties.empty())
    throw ConfigError("at least one variety is required");
  if (cfg.checks.empty())
    throw ConfigError("at least one check is required");
  try {
    (void)Variety::vect(cfg.vect_prime);
  } catch (const InputError &e) {
    throw ConfigError(e.what());
  }
}

DAutomaton check_instance(const CheckConfig &cfg, std::size_t i) {
  const Variety v = variety_of(cfg.varieties[i % cfg.varieties.size()], cfg.vect_prime);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(i)};
  std::mt19937_64 rng(seq);
  const std::size_t cap =
      v.tag() == VarietyTag::Set ? cfg.max_base_states : std::min<std::size_t>(cfg.max_base_states, 3);
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % cap);
  std::string letters;
  for (std::size_t l = 0; l < cfg.alphabet_size; ++l)
    letters += static_cast<char>('a' + l);
  return random_automaton(v, n, Alphabet::from_string(letters), rng());
}

std::string check_tran_eq_oracle(const DAutomaton &a) {
  const SyntacticResult syn = syntactic_monoid(a);
  const SyntacticResult oracle = syntactic_quotient_oracle(a);
  if (syn.syn().size() != oracle.syn().size())
    return "oracle finds " + std::to_string(oracle.syn().size()) + " classes, T(Min A) has " +
           std::to_string(syn.syn().size()) + " elements";
  if (!generator_isomorphism(syn.pair, oracle.pair))
    return "oracle quotient and T(Min A) have the same size but different tables";

  const std::size_t len = a.variety.tag() == VarietyTag::Set ? 4 : 3;
  const OraclePartition part = syntactic_partition_oracle(a, len);
  std::map<std::size_t, Elem> class_to_elem;
  std::map<Elem, std::size_t> elem_to_class;
  for (std::size_t i = 0; i < part.elements.size(); ++i) {
    const std::size_t b = part.partition.block_of(static_cast<Elem>(i));
    const Elem x = monoid_eval(syn.syn(), syn.pair.e_on_letters, part.elements[i]);
    auto [it, fresh] = class_to_elem.emplace(b, x);
    auto [jt, fresh2] = elem_to_class.emplace(x, b);
    if (it->second != x || jt->second != b)
      return "oracle class of " + format_free(part.elements[i], a.alphabet) +
             " does not match its element of T(Min A)";
  }
  return {};
}

std::string check_universal_property(const DAutomaton &a) {
  const RecognizingPair t = transition_monoid(a);
  const SyntacticResult syn = syntactic_monoid(a);
  const Factorization fac = factor_through(t, syn);
  if (!fac.h)
    return "no factorization through Syn L: " + fac.counterexample;
  if (!fac.surjective)
    return "factorization through Syn L is not surjective";
  return {};
}

std::string check_duality(const DAutomaton &a) {
  const auto l = RegularLanguageHandle::from_dfa(a);
  const SyndualReport s = verify_syndual(l);
  if (!s.isomorphic)
    return "dual algebra (" + std::to_string(s.dual.monoid.size()) +
           " atoms) is not isomorphic to T(Min L) (" + std::to_string(s.syntactic.syn().size()) +
           " elements)";
  const MindualReport m = verify_mindual(l);
  if (!m.isomorphic)
    return "left-derivative atoms (" + std::to_string(m.atom_count) +
           ") do not form Min L (" + std::to_string(m.minimal_states) + " states)";
  return {};
}

std::string check_minimize_idempotent(const DAutomaton &a) {
  const DAutomaton once = minimize(a).automaton;
  const DAutomaton twice = minimize(once).automaton;
  if (!automaton_iso(once, twice))
    return "minimize(minimize(A)) is not isomorphic to minimize(A)";
  const auto elements = fm_enumerate(a.variety, a.alphabet, 3);
  for (const auto &u : elements)
    if (eval(a, u) != eval(once, u))
      return "minimization changes the language at " + format_free(u, a.alphabet);
  return {};
}

std::string check_recognition(const DAutomaton &a, std::size_t max_len) {
  const auto elements = fm_enumerate(a.variety, a.alphabet, max_len);
  std::string err = pair_mismatch(transition_monoid(a), a, elements, "transition monoid");
  if (err.empty())
    err = pair_mismatch(syntactic_monoid(a).pair, a, elements, "syntactic monoid");
  if (err.empty())
    err = pair_mismatch(syntactic_quotient_oracle(a).pair, a, elements, "oracle quotient");
  return err;
}

bool CheckReport::ok() const {
  for (const auto &o : outcomes)
    if (!o.failures.empty())
      return false;
  return true;
}

std::string CheckReport::text() const {
  std::ostringstream out;
  for (const auto &o : outcomes) {
    out << (o.failures.empty() ? "PASS " : "FAIL ") << check_name(o.check) << ": " << o.passed
        << "/" << o.run << " passed";
    if (o.skipped)
      out << ", " << o.skipped << " skipped";
    out << "\n";
    for (const auto &f : o.failures) {
      out << "  instance " << f.instance << " (" << f.variety << "): " << f.message << "\n";
      if (!f.replay_path.empty())
        out << "    replay: " << f.replay_path << "\n";
    }
  }
  return out.str();
}

CheckReport run_checks(const CheckConfig &cfg) {
  validate_config(cfg);
  CheckReport report;
  for (CheckKind k : cfg.checks)
    report.outcomes.push_back({k, 0, 0, 0, {}});
  for (std::size_t i = 0; i < cfg.instance_count; ++i) {
    const DAutomaton a = check_instance(cfg, i);
    for (auto &o : report.outcomes) {
      ++o.run;
      if (o.check == CheckKind::Duality && a.variety.tag() != VarietyTag::Set) {
        ++o.skipped;
        continue;
      }
      std::string err;
      try {
        switch (o.check) {
        case CheckKind::TranEqOracle:
          err = check_tran_eq_oracle(a);
          break;
        case CheckKind::UniversalProperty:
          err = check_universal_property(a);
          break;
        case CheckKind::Duality:
          err = check_duality(a);
          break;
        case CheckKind::MinimizeIdempotent:
          err = check_minimize_idempotent(a);
          break;
        case CheckKind::Recognition:
          err = check_recognition(a);
          break;
        }
      } catch (const SizeGuardExceeded &) {
        ++o.skipped;
        continue;
      } catch (const std::exception &e) {
        err = std::string("exception: ") + e.what();
      }
      if (err.empty()) {
        ++o.passed;
        continue;
      }
      CheckFailure f{i, a.variety.label(), err, {}, emit_automaton(a)};
      if (!cfg.replay_dir.empty()) {
        std::filesystem::create_directories(cfg.replay_dir);
        f.replay_path = (std::filesystem::path(cfg.replay_dir) /
                         ("replay-" + check_name(o.check) + "-" + std::to_string(i) + ".json"))
                            .string();
        write_text_file(f.replay_path, f.automaton_json);
      }
      o.failures.push_back(std::move(f));
    }
  }
  return report;
}

} // namespace synalg
