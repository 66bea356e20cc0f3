#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clinner {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or payload could not be parsed. Carries the source name and a
/// 1-based line number when one is known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(line > 0 ? source + ":" + std::to_string(line) + ": " + what
                       : source + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Input data violates a documented invariant (bounds, whitelist,
/// duplicate ids, mismatched lengths, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A native label is absent from a mapping. Distinct from a mapped drop:
/// it signals an unmapped vocabulary item in the source corpus.
class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& native,
                             const std::string& dataset)
      : Error("unknown native label \"" + native + "\" for dataset \"" +
              dataset + "\""),
        native_(native) {}

  const std::string& native_label() const { return native_; }

 private:
  std::string native_;
};

/// A generated text could not be aligned back onto the original document.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Remote model gateway failures (transport, auth, rate limiting).
class GatewayError : public Error {
 public:
  enum class Kind { Auth, RateLimit, Transport, BadResponse };

  GatewayError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace clinner
