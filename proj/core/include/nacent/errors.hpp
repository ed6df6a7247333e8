#pragma once

#include <stdexcept>
#include <string>

namespace nacent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Table failed a group law. The message names the law and a witness.
class NotAGroup : public Error {
 public:
  NotAGroup(std::string law, const std::string& detail)
      : Error("not a group: " + law + " violated: " + detail), law_(std::move(law)) {}
  const std::string& law() const noexcept { return law_; }

 private:
  std::string law_;
};

class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class ParentMismatch : public Error {
 public:
  ParentMismatch() : Error("subgroups belong to different parent groups") {}
};

class PrimeDoesNotDivide : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class AbelianGroup : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nacent
