#pragma once

#include <stdexcept>
#include <string>

namespace toptypes {

// Malformed textual input (ordinal notation, tree text/JSON, addresses).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (e.g. predecessor of a limit).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace toptypes
