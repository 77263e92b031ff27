#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace l5 {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse(); carries the byte offset of the offending token and the
/// tokens that would have been accepted there.
class ParseError : public Error {
public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

class UnboundVariable : public Error {
public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

/// A structure (algebra, filter, frame, assignment, model) violates a precondition.
class InvalidStructure : public Error {
public:
  using Error::Error;
};

/// A construction produced something its own invariants forbid. Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace l5
