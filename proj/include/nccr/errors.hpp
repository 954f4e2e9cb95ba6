#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nccr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Rejected input: the weight data does not describe a valid singularity.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The subfamily obtained by dropping input weight `witness` fails to
/// generate the group.
class GenerationFailure : public ValidationError {
 public:
  GenerationFailure(std::size_t witness, const std::string& what)
      : ValidationError("GenerationFailure", what), witness_(witness) {}
  std::size_t witness() const noexcept { return witness_; }

 private:
  std::size_t witness_;
};

class SignCountFailure : public ValidationError {
 public:
  SignCountFailure(std::size_t positives, std::size_t negatives, const std::string& what)
      : ValidationError("SignCountFailure", what), positives_(positives), negatives_(negatives) {}
  std::size_t positives() const noexcept { return positives_; }
  std::size_t negatives() const noexcept { return negatives_; }

 private:
  std::size_t positives_;
  std::size_t negatives_;
};

/// A theorem-backed check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Precondition on a caller-supplied argument failed.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace nccr
