#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gamma02 {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied an input outside an operation's contract (bad level,
// singular matrix, non-member passed where membership is required).
class InputError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownKeyError : public InputError {
 public:
  explicit UnknownKeyError(std::string key)
      : InputError("unknown certificate key: " + key), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// A mathematical event: the computation finished but found something the
// theory says should not happen, or a bounded search ran out of room.
// The CLI maps these to exit code 2.
class ResearchEvent : public Error {
 public:
  using Error::Error;
};

class UniquenessViolation : public ResearchEvent {
 public:
  using ResearchEvent::ResearchEvent;
};

class CoverageGap : public ResearchEvent {
 public:
  CoverageGap(std::string what, std::vector<std::string> missing)
      : ResearchEvent(std::move(what)), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

class SearchExhausted : public ResearchEvent {
 public:
  using ResearchEvent::ResearchEvent;
};

class MissingCertificate : public ResearchEvent {
 public:
  using ResearchEvent::ResearchEvent;
};

class VerificationFailure : public ResearchEvent {
 public:
  VerificationFailure(std::string what, std::string key)
      : ResearchEvent(std::move(what)), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// An identity that holds by exact algebra failed. Indicates a bug, not data.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gamma02
