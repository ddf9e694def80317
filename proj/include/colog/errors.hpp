#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax. `position` is a 0-based character offset into the
// parsed text (or the line number for line-oriented file formats, see line()).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position_(position), line_(line) {}
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// A search or ordering request exceeds the configured enumeration bounds.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Semantically invalid input: modal formula where a propositional one is
// required, malformed model, unsatisfiable rule antecedent, ...
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace colog
