#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

// Invalid input, violated precondition, or exceeded resource guard.
// Raised for caller mistakes; the CLI maps it to a usage/input failure.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two independent evaluation routes of the same quantity disagreed.
// This always indicates an implementation bug, never bad input.
class consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace mackey
