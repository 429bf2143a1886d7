// Copyright 2026 The zerovoc Authors
// Deterministic random number generation. All distribution transforms are
// implemented here so that streams are reproducible across platforms and
// standard-library versions.
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace zerovoc {

class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1).
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); safe as a log() argument.
  double uniform_open() { return (double(gen_() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // One value per call (Box-Muller, no cached spare).
  double normal() {
    double u1 = uniform_open();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  double gumbel() { return -std::log(-std::log(uniform_open())); }

  // Integer in [0, n).
  uint64_t below(uint64_t n) { return gen_() % n; }

  bool bernoulli(double p) { return uniform() < p; }

  // Child generator seeded from this stream.
  Rng fork() { return Rng(next_u64()); }

  std::string serialize() const {
    std::ostringstream os;
    os << gen_;
    return os.str();
  }

  void deserialize(const std::string& s) {
    std::istringstream is(s);
    is >> gen_;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace zerovoc
