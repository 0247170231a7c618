#pragma once

#include <stdexcept>
#include <string>

namespace algdyn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (zero polynomial, singular
/// matrix, dimension mismatch, ...). These indicate caller bugs.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An interval computation could not decide a sign or a comparison within
/// the configured precision budget. `subject` names the place or class.
class CertificationError : public Error {
 public:
  CertificationError(std::string subject, const std::string& what)
      : Error(what), subject_(std::move(subject)) {}
  const std::string& subject() const noexcept { return subject_; }

 private:
  std::string subject_;
};

/// The joint p-adic valuation reconstruction could not separate embeddings.
class SeparationError : public Error {
 public:
  using Error::Error;
};

}  // namespace algdyn
