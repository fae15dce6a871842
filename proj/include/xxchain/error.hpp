#pragma once

#include <stdexcept>
#include <string>

namespace xxchain {

// Thrown when a request exceeds the configured size cap for dense or
// exhaustive work.
class SizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative numerical procedure fails to meet its contract
// (eigensolver residual, unbracketed root).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace xxchain
