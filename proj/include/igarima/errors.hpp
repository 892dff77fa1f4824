// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace igarima {

/// Raised for malformed, unreadable, or invalid input data (files, datasets).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numerical routine cannot meet its accuracy or convergence
/// contract (failed bracket, divergent iteration, exhausted budget).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace igarima
