#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jointvec {

// Base class for every error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A file does not follow its documented layout (bad magic, wrong field
// count, missing header line, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

class TruncatedRecordError : public FormatError {
 public:
  using FormatError::FormatError;
};

class VersionMismatchError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Line-oriented parse failure; line numbers are 1-based.
class ParseError : public FormatError {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : FormatError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

class TrainingDivergedError : public Error {
 public:
  using Error::Error;
};

class InsufficientCoverageError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (zero vector for
// cosine, |rho| >= 1 for the Fisher transform, constant ranks, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace jointvec
