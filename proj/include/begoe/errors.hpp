// Copyright 2026 The begoe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace begoe {

/// Thrown when a requested space exceeds the exact-arithmetic or memory
/// capacity documented for the operation.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on invalid configuration (bad field values, unknown keys).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace begoe
