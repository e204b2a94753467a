#ifndef COXGROWTH_ERRORS_HPP
#define COXGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxgrowth {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph, symbol or parameter violates a structural invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Coxeter weight outside the exactly representable set {2,3,4,5,6,inf}.
class UnsupportedWeight : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the given group type (e.g. growth rate of a finite group).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Root isolation found no positive real root.
class NoPositiveRoot : public Error {
 public:
  using Error::Error;
};

/// Breadth-first enumeration exceeded its element budget.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, int depth_reached)
      : Error(what), depth_reached_(depth_reached) {}
  int depth_reached() const noexcept { return depth_reached_; }

 private:
  int depth_reached_;
};

/// Malformed `.cox` text or Coxeter symbol; `line` is 1-based (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace coxgrowth

#endif  // COXGROWTH_ERRORS_HPP
