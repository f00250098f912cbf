#include "synalg/checks.hpp"
#include "synalg/duality.hpp"
#include "synalg/error.hpp"
#include "synalg/io.hpp"
#include "synalg/minimize.hpp"
#include "synalg/regex.hpp"
#include "synalg/syntactic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace synalg;

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kValidation = 2, kSizeGuard = 3, kUsage = 4 };

struct InputOptions {
  std::string file;
  std::string regex;
  std::string alphabet = "ab";

  void attach(CLI::App *cmd) {
    cmd->add_option("-i,--input", file, "automaton JSON file");
    cmd->add_option("--regex", regex, "regular expression (SET input)");
    cmd->add_option("--alphabet", alphabet, "letters for --regex")->capture_default_str();
  }

  DAutomaton load() const {
    if (file.empty() == regex.empty())
      throw ConfigError("give exactly one of -i FILE or --regex R");
    if (!file.empty())
      return parse_automaton_file(file);
    return regex_to_dfa(regex, Alphabet::from_string(alphabet));
  }
};

void emit(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::vector<VarietyTag> parse_tags(const std::vector<std::string> &names) {
  std::vector<VarietyTag> out;
  for (const auto &n : names) {
    try {
      out.push_back(Variety::from_name(n).tag());
    } catch (const InputError &e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

std::string describe_dualization(const RegularLanguageHandle &l, const SyndualReport &r,
                                  const std::string &atoms_dir) {
  std::ostringstream out;
  const Alphabet &alphabet = l.alphabet();
  out << "language: minimal DFA with " << l.dfa().size() << " states\n";
  out << "generators (two-sided derivatives of the reversal): " << r.variety.generators.size()
      << "\n";
  out << "atoms: " << r.variety.atoms.size() << "\n";
  for (std::size_t z = 0; z < r.variety.atoms.size(); ++z) {
    Word w = r.algebra.witnesses[z];
    std::reverse(w.begin(), w.end());
    out << "  atom " << z << ": contains " << alphabet.format(w) << ", minimal DFA "
        << r.variety.atoms[z].language.dfa().size() << " states";
    if (!atoms_dir.empty()) {
      const auto path = std::filesystem::path(atoms_dir) / ("atom-" + std::to_string(z) + ".json");
      write_text_file(path.string(), emit_automaton(r.variety.atoms[z].language.dfa()));
      out << " (" << path.string() << ")";
    }
    out << "\n";
  }
  out << "\ndual monoid:\n" << emit_monoid(r.dual, alphabet, MonoidFormat::Table);
  out << "\nsyntactic monoid: " << r.syntactic.syn().size() << " elements\n";
  out << "verdict: " << (r.isomorphic ? "isomorphic" : "NOT isomorphic") << "\n";
  return out.str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"syntactic algebras of regular languages"};
  app.require_subcommand(1);

  InputOptions in_min, in_tran, in_syn, in_oracle, in_dual, in_lift;
  std::string min_out, min_report;
  auto *minimize_cmd = app.add_subcommand("minimize", "minimal automaton");
  in_min.attach(minimize_cmd);
  minimize_cmd->add_option("-o,--output", min_out, "output automaton file (default stdout)");
  minimize_cmd->add_option("--report", min_report, "write a minimization report");

  std::string tran_format = "table", syn_format = "table";
  auto *transmon_cmd = app.add_subcommand("transmon", "transition monoid of the automaton as given");
  in_tran.attach(transmon_cmd);
  transmon_cmd->add_option("--out", tran_format, "table or json")->capture_default_str();

  auto *synmon_cmd = app.add_subcommand("synmon", "syntactic monoid");
  in_syn.attach(synmon_cmd);
  synmon_cmd->add_option("--out", syn_format, "table or json")->capture_default_str();

  std::size_t maxlen = 4;
  auto *oracle_cmd = app.add_subcommand("oracle", "syntactic congruence classes of short elements");
  in_oracle.attach(oracle_cmd);
  oracle_cmd->add_option("--maxlen", maxlen, "word length bound (at most 6)")->capture_default_str();

  std::string atoms_dir;
  auto *dualize_cmd = app.add_subcommand("dualize", "dual of the local variety of the reversal");
  in_dual.attach(dualize_cmd);
  dualize_cmd->add_option("--atoms-dir", atoms_dir, "write each atom's DFA here");

  std::string lift_to, lift_out;
  unsigned lift_p = 2;
  auto *lift_cmd = app.add_subcommand("lift", "free lift of a SET automaton");
  in_lift.attach(lift_cmd);
  lift_cmd->add_option("--to", lift_to, "pointed | involution | jsl | vect")->required();
  lift_cmd->add_option("-p,--prime", lift_p, "field size for vect")->capture_default_str();
  lift_cmd->add_option("-o,--output", lift_out, "output automaton file (default stdout)");

  CheckConfig cfg;
  std::vector<std::string> check_varieties{"set"}, check_names;
  auto *check_cmd = app.add_subcommand("check", "randomized cross-validation");
  check_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  check_cmd->add_option("--instances", cfg.instance_count)->capture_default_str();
  check_cmd->add_option("--max-states", cfg.max_base_states)->capture_default_str();
  check_cmd->add_option("--alphabet-size", cfg.alphabet_size)->capture_default_str();
  check_cmd->add_option("--varieties", check_varieties, "set pointed involution jsl vect")
      ->capture_default_str();
  check_cmd->add_option("-p,--prime", cfg.vect_prime, "field size for vect instances")->capture_default_str();
  check_cmd->add_option("--checks", check_names,
                        "tran-eq-oracle universal-property duality minimize-idempotent recognition");
  check_cmd->add_option("--replay-dir", cfg.replay_dir, "where failing instances are written");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*minimize_cmd) {
      const DAutomaton a = in_min.load();
      const Minimized m = minimize(a);
      emit(min_out, emit_automaton(m.automaton));
      if (!min_report.empty())
        write_text_file(min_report, emit_minimization_report(m.report, a.alphabet));
      return kOk;
    }
    if (*transmon_cmd) {
      const DAutomaton a = in_tran.load();
      std::cout << emit_monoid(transition_monoid(a), a.alphabet, parse_monoid_format(tran_format));
      return kOk;
    }
    if (*synmon_cmd) {
      const DAutomaton a = in_syn.load();
      std::cout << emit_monoid(syntactic_monoid(a).pair, a.alphabet, parse_monoid_format(syn_format));
      return kOk;
    }
    if (*oracle_cmd) {
      const DAutomaton a = in_oracle.load();
      if (maxlen > 6)
        throw ConfigError("--maxlen must be at most 6");
      std::cout << emit_oracle_partition(syntactic_partition_oracle(a, maxlen), a.alphabet);
      return kOk;
    }
    if (*dualize_cmd) {
      const auto l = RegularLanguageHandle::from_dfa(in_dual.load());
      if (!atoms_dir.empty())
        std::filesystem::create_directories(atoms_dir);
      const SyndualReport r = verify_syndual(l);
      std::cout << describe_dualization(l, r, atoms_dir);
      return r.isomorphic ? kOk : kPropertyFailure;
    }
    if (*lift_cmd) {
      const DAutomaton a = in_lift.load();
      Variety target = Variety::set();
      try {
        target = Variety::from_name(lift_to, lift_p);
      } catch (const InputError &e) {
        throw ConfigError(e.what());
      }
      emit(lift_out, emit_automaton(lift_automaton(a, target)));
      return kOk;
    }
    if (*check_cmd) {
      cfg.varieties = parse_tags(check_varieties);
      if (!check_names.empty()) {
        cfg.checks.clear();
        for (const auto &n : check_names)
          cfg.checks.push_back(check_from_name(n));
      }
      const CheckReport report = run_checks(cfg);
      std::cout << report.text();
      return report.ok() ? kOk : kPropertyFailure;
    }
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeGuardExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
