#pragma once

#include <stdexcept>
#include <string>

namespace slimlat {

enum class ErrorKind {
  invalid_input,  // malformed structure handed to a constructor or operation
  parse,          // DSL / JSON syntax or schema problems
  validation,     // a structural predicate the caller relied on does not hold
  budget,         // a search would exceed its documented budget
  internal,       // a self-check failed; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace slimlat
