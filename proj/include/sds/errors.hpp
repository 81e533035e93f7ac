#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sds {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by Graph construction: self-loops, parallel edges, bad indices.
struct InvalidGraphError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DisconnectedError : Error {
  DisconnectedError() : Error("input graph is not connected") {}
  explicit DisconnectedError(const std::string& what) : Error(what) {}
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct NotTwoConnectedError : Error {
  NotTwoConnectedError() : Error("graph is not 2-connected") {}
};

}  // namespace sds
