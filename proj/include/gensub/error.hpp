#pragma once

#include <stdexcept>
#include <string>

namespace gensub {

/// Base of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name that is not an element of the poset (or class table) it was looked up in.
class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& name)
      : Error("unknown element: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

/// Element-count ceiling exceeded while materializing a relation.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kUnknownClass, kAdmittability, kMalformedInterval, kDeclaration };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace gensub
