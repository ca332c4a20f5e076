#ifndef ROTKIT_ERRORS_HPP
#define ROTKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotkit {

/// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value that must be finite was NaN or infinite.
struct NonFinite : Error {
  using Error::Error;
};

/// An axis deviated from unit norm beyond the construction tolerance.
struct NonUnitAxis : Error {
  using Error::Error;
};

/// A vector that must be normalizable had (near-)zero norm.
struct ZeroAxis : Error {
  using Error::Error;
};

/// A 2x2 matrix fed to extract_vector was not Hermitian-traceless.
struct NotInPauliSpan : Error {
  using Error::Error;
};

/// A 2x2 matrix was not special unitary (detail says which condition failed).
struct NotSpecialUnitary : Error {
  using Error::Error;
};

/// A 3x3 matrix was not a proper rotation.
struct NotRotation : Error {
  using Error::Error;
};

/// Operation undefined for +/-Id (no unique rotation axis).
struct CentralElement : Error {
  using Error::Error;
};

/// Mirror axes were (anti)parallel; the composed rotation degenerates.
struct ParallelMirrors : Error {
  using Error::Error;
};

/// Script tokenizer error; pos is a byte offset into the input text.
struct LexError : Error {
  std::size_t pos;
  LexError(std::size_t pos_, const std::string& what_)
      : Error("lex error at offset " + std::to_string(pos_) + ": " + what_), pos(pos_) {}
};

/// Script parser error; pos is a byte offset, expected names what was missing.
struct ParseError : Error {
  std::size_t pos;
  std::string expected;
  ParseError(std::size_t pos_, const std::string& expected_)
      : Error("parse error at offset " + std::to_string(pos_) + ": expected " + expected_),
        pos(pos_),
        expected(expected_) {}
};

}  // namespace rotkit

#endif
