// Copyright 2026 The zerovoc Authors
// Waveform analysis frontend: MFCC+delta features, short-time Fourier power
// spectra, and an autocorrelation F0 estimator. All functions here are pure.
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <complex>
#include <vector>

#include "zerovoc/mat.hpp"
#include "zerovoc/wav.hpp"

namespace zerovoc::dsp {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse = false);

struct SpectralConfig {
  int fft_bins = 512;
  int frame_length = 400;
  int stride = 100;
};

struct Spectrogram {
  Mat<double> power;  // [fft_bins/2+1 x n_frames], linear power
  SpectralConfig config;
};

// Number of analysis frames for a given signal length; -1 if too short.
inline int64_t frame_count(int64_t n_samples, int frame_length, int stride) {
  if (n_samples < frame_length) return -1;
  return (n_samples - frame_length) / stride + 1;
}

// Hann-windowed power spectrogram, zero-padded to cfg.fft_bins.
// Throws UsageError if the config is invalid or the signal is too short.
Spectrogram stft(const Waveform& wave, const SpectralConfig& cfg);

struct FeatureSequence {
  Mat<double> frames;  // [n_frames x 39]: 13 MFCC, 13 delta, 13 delta-delta
  int frame_rate = 100;
};

// 13 MFCCs over 25 ms Hann windows at 10 ms stride, with first and second
// derivatives appended. Requires at least one full window (400 samples).
FeatureSequence compute_mfcc(const Waveform& wave);

struct F0Contour {
  std::vector<double> f0_hz;  // 0.0 means unvoiced, else within [60, 400]
  int frame_rate = 100;
};

// Autocorrelation pitch tracker, 25 ms window / 10 ms hop, 60-400 Hz search.
// Frames whose normalized peak falls below 0.45 are marked unvoiced.
F0Contour estimate_f0(const Waveform& wave);

constexpr int kMfccWindow = 400;
constexpr int kMfccStride = 160;
constexpr int kNumCepstra = 13;
constexpr int kFeatureDim = 39;

}  // namespace zerovoc::dsp
