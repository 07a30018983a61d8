#ifndef LIESOL_ERRORS_HPP
#define LIESOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liesol {

// Status codes shared with the C API and the CLI exit codes.
enum class Status : int {
  Ok = 0,
  Mismatch = 1,
  Parse = 2,
  Jacobi = 3,
  Unsupported = 4,
  Certificate = 5,
  Invalid = 6,
};

class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const { return status_; }

private:
  Status status_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(Status::Parse, msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

class JacobiError : public Error {
public:
  explicit JacobiError(const std::string& msg) : Error(Status::Jacobi, msg) {}
};

class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& msg) : Error(Status::Unsupported, msg) {}
};

// An internal consistency check failed; results cannot be trusted.
class CertificateError : public Error {
public:
  explicit CertificateError(const std::string& msg) : Error(Status::Certificate, msg) {}
};

class InvalidError : public Error {
public:
  explicit InvalidError(const std::string& msg) : Error(Status::Invalid, msg) {}
};

}  // namespace liesol

#endif
