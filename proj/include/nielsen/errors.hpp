#pragma once

#include <stdexcept>
#include <string>

namespace nielsen {

// Malformed input, violated preconditions, contradictory facts. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two rules disagreeing, or a fact base that contradicts itself. CLI exit code 3.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nielsen
