#pragma once

#include <stdexcept>
#include <string>

namespace melpress {

// Error taxonomy, mapped to CLI exit codes by tools/melpress_main.cpp:
// ConfigError -> 2, NumericError -> 3, IoError -> 4.

// Invalid configuration or arguments supplied by the user.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse: a precondition of an operation was violated.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Non-finite values or other numeric breakdown during compute.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File I/O and parse failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace melpress
