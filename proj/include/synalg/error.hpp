#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace synalg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: undefined element ids, unknown letters, bad tables.
class InputError : public Error {
public:
  using Error::Error;
};

/// Invalid command or harness configuration.
class ConfigError : public InputError {
public:
  using InputError::InputError;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

class VarietyMismatch : public Error {
public:
  using Error::Error;
};

/// A constructed carrier grew past the configured cap (SYNALG_SIZE_GUARD, default 4096).
class SizeGuardExceeded : public Error {
public:
  SizeGuardExceeded(const std::string &what, std::size_t attempted, std::size_t limit)
      : Error(what + ": carrier size " + std::to_string(attempted) + " exceeds guard " +
              std::to_string(limit)),
        attempted_(attempted), limit_(limit) {}

  std::size_t attempted() const noexcept { return attempted_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t attempted_;
  std::size_t limit_;
};

class NotACongruence : public Error {
public:
  NotACongruence(std::string operation, std::size_t left, std::size_t right)
      : Error("partition is not a congruence: " + operation + " separates a block pair (" +
              std::to_string(left) + ", " + std::to_string(right) + ")"),
        operation_(std::move(operation)), left_(left), right_(right) {}

  const std::string &operation() const noexcept { return operation_; }
  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

private:
  std::string operation_;
  std::size_t left_;
  std::size_t right_;
};

/// Regex syntax error; `position` is a byte offset into the pattern.
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// JSON schema violation; `pointer` is an RFC 6901 JSON pointer.
class SchemaError : public Error {
public:
  SchemaError(const std::string &pointer, const std::string &msg)
      : Error("schema error at " + (pointer.empty() ? std::string("/") : pointer) + ": " + msg),
        pointer_(pointer) {}

  const std::string &pointer() const noexcept { return pointer_; }

private:
  std::string pointer_;
};

/// Raised when an input automaton or object fails its variety laws.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string> &violations() const noexcept { return violations_; }

private:
  static std::string join(const std::vector<std::string> &v) {
    std::string out = "validation failed";
    for (const auto &s : v)
      out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

class NonFunctionalTransition : public Error {
public:
  NonFunctionalTransition(std::size_t atom, std::size_t letter)
      : Error("no unique successor atom for atom " + std::to_string(atom) + " on letter index " +
              std::to_string(letter) + " (generators not derivative-closed)"),
        atom_(atom), letter_(letter) {}

  std::size_t atom() const noexcept { return atom_; }
  std::size_t letter() const noexcept { return letter_; }

private:
  std::size_t atom_;
  std::size_t letter_;
};

/// Carrier cap read from SYNALG_SIZE_GUARD on every call; 4096 when unset or unparsable.
std::size_t size_guard();

/// Throws SizeGuardExceeded if `size` is above size_guard().
void check_size_guard(const std::string &what, std::size_t size);

} // namespace synalg
