#ifndef WIKIRANK_ERRORS_HPP
#define WIKIRANK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace wikirank {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input syntax (JSON lines, TSV, responses).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Syntactically valid input that breaks a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Missing or inconsistent configuration (e.g. no API token).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Network-level failure after retries were exhausted.
class TransportError : public Error {
 public:
  using Error::Error;
};

// Non-success HTTP response from a remote service.
class ServiceError : public Error {
 public:
  ServiceError(int status, std::string body)
      : Error("service returned HTTP " + std::to_string(status)),
        status_(status),
        body_(std::move(body)) {}

  int status() const noexcept { return status_; }
  const std::string& body() const noexcept { return body_; }

 private:
  int status_;
  std::string body_;
};

}  // namespace wikirank

#endif  // WIKIRANK_ERRORS_HPP
