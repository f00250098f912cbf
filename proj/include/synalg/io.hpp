#pragma once

#include "synalg/automaton.hpp"
#include "synalg/duality.hpp"
#include "synalg/minimize.hpp"
#include "synalg/syntactic.hpp"

#include <string>
#include <string_view>

namespace synalg {

/// Strict parse of the automaton JSON format. Unknown fields and malformed tables raise
/// SchemaError with a JSON pointer; law violations raise ValidationError.
///
///   {"variety": "set|pointed|involution|jsl|vect", "p": 2, "alphabet": ["a","b"],
///    "states": ["q0","q1"], "ops": {...}, "initial": "q0",
///    "delta": {"a": {"q0": "q1", ...}, ...}, "output": {"q0": "1", ...}}
///
/// ops by variety (rows of tables follow the order of "states"):
///   pointed     {"basepoint": "q"}
///   involution  {"complement": {"q": "q'", ...}}
///   jsl         {"bottom": "q", "join": [["q", ...], ...]}
///   vect        {"zero": "q", "add": [[...], ...], "scale": [[...] for c = 0..p-1]}
DAutomaton parse_automaton(std::string_view text);

/// Reads the file (IoError on failure) and parses it.
DAutomaton parse_automaton_file(const std::string &path);

/// Inverse of parse_automaton; pretty-printed, deterministic.
std::string emit_automaton(const DAutomaton &a);

enum class MonoidFormat { Table, Json };

MonoidFormat parse_monoid_format(const std::string &name);

/// Elements in canonical-name order, cells printed by name, plus f, the generator images and
/// a law-check summary.
std::string emit_monoid(const RecognizingPair &pair, const Alphabet &alphabet,
                        MonoidFormat format);

std::string emit_minimization_report(const MinimizationReport &report, const Alphabet &alphabet);

std::string emit_oracle_partition(const OraclePartition &p, const Alphabet &alphabet);

/// Writes text to a file, throwing IoError.
void write_text_file(const std::string &path, const std::string &text);

} // namespace synalg
