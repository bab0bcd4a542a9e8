#pragma once

#include <stdexcept>
#include <string>

namespace synchrolab {

// Malformed input: bad file contents, out-of-range states or letters,
// parameters outside an operation's domain.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition about the automaton itself failed (e.g. it is not
// synchronizing where a synchronizing automaton is required).
class NotSynchronizingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The request is well-formed but too large to run in-process.
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace synchrolab
