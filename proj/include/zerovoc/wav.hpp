// Copyright 2026 The zerovoc Authors
// RIFF WAV input/output. Only 16-bit PCM, mono, 16 kHz files are accepted;
// anything else is rejected rather than resampled.
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <string>
#include <vector>

#include "zerovoc/common.hpp"

namespace zerovoc {

struct Waveform {
  std::vector<double> samples;  // amplitudes in [-1, 1]
  int sample_rate = kSampleRate;

  double duration_sec() const {
    return double(samples.size()) / double(sample_rate);
  }
};

// Throws UsageError on missing files or any format mismatch.
Waveform read_wav(const std::string& path);

// Writes PCM s16le mono 16 kHz. If normalize is true the signal is scaled so
// the peak sits at 0.95 full scale (the in-memory samples are not modified).
void write_wav(const std::string& path, const Waveform& wave,
               bool normalize = false);

}  // namespace zerovoc
