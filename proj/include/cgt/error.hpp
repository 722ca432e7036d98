#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap (group order, subgroup count) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Text input (permutations, catalog files, grids) failed to parse.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cgt
