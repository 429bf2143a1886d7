// Copyright 2026 The zerovoc Authors
// Shared error types and small utilities.
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zerovoc {

// Bad CLI usage, unreadable inputs, malformed configs, contract violations
// on public entry points. Mapped to exit code 2 by the CLI.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values where the numerics must abort (NaN loss, bad gradient).
// Mapped to exit code 3 by the CLI.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_finite(double x) { return std::isfinite(x); }

constexpr int kSampleRate = 16000;

}  // namespace zerovoc
