#pragma once

#include <stdexcept>
#include <string>

namespace hyperfix {

enum class ErrorKind {
  input,         // malformed or inconsistent input
  cap_exceeded,  // a configured size cap would be exceeded
  hypothesis,    // a theorem hypothesis does not hold for the input
  structure,     // the input lacks a structural property an operation needs
  internal,      // a verified invariant failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::cap_exceeded, what) {}
};

/// Raised when a solver refuses because the named theorem's hypotheses fail.
class HypothesisViolation : public Error {
public:
  HypothesisViolation(std::string theorem, const std::string& what)
      : Error(ErrorKind::hypothesis, theorem + ": " + what), theorem_(std::move(theorem)) {}
  const std::string& theorem() const noexcept { return theorem_; }

private:
  std::string theorem_;
};

class StructureError : public Error {
public:
  explicit StructureError(const std::string& what) : Error(ErrorKind::structure, what) {}
};

class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

/// Process exit code for an error kind (CLI contract).
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return 2;
    case ErrorKind::cap_exceeded: return 3;
    case ErrorKind::hypothesis:
    case ErrorKind::structure: return 4;
    case ErrorKind::internal: return 1;
  }
  return 1;
}

}  // namespace hyperfix
