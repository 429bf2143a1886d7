// Copyright 2026 The zerovoc Authors
// MFCC, STFT and F0 analysis.
//
// Licensed under the Apache License, Version 2.0

#include "zerovoc/dsp.hpp"

#include <algorithm>
#include <cmath>

#include "zerovoc/common.hpp"

namespace zerovoc::dsp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Periodic Hann window, the analysis convention for the spectral loss.
std::vector<double> hann_periodic(int n) {
  std::vector<double> w(size_t(n));
  for (int i = 0; i < n; ++i) w[size_t(i)] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / n);
  return w;
}

// Symmetric Hann window, the MFCC framing convention.
std::vector<double> hann_symmetric(int n) {
  std::vector<double> w(size_t(n));
  for (int i = 0; i < n; ++i)
    w[size_t(i)] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / (n - 1));
  return w;
}

double hz_to_mel(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }
double mel_to_hz(double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); }

constexpr int kNumMelFilters = 26;
constexpr int kMfccFft = 512;
constexpr double kPreEmphasis = 0.97;
constexpr double kLogFloor = 1e-10;

// Triangular mel filterbank over the one-sided power spectrum, 0-8 kHz.
Mat<double> mel_filterbank(int fft_bins, int sample_rate) {
  int n_bins = fft_bins / 2 + 1;
  Mat<double> fb(kNumMelFilters, n_bins);
  double mel_lo = hz_to_mel(0.0);
  double mel_hi = hz_to_mel(sample_rate / 2.0);
  std::vector<double> edges(kNumMelFilters + 2);
  for (int i = 0; i < kNumMelFilters + 2; ++i) {
    double mel = mel_lo + (mel_hi - mel_lo) * i / (kNumMelFilters + 1);
    edges[size_t(i)] = mel_to_hz(mel);
  }
  for (int m = 0; m < kNumMelFilters; ++m) {
    double lo = edges[size_t(m)], mid = edges[size_t(m + 1)], hi = edges[size_t(m + 2)];
    for (int b = 0; b < n_bins; ++b) {
      double f = double(b) * sample_rate / fft_bins;
      double w = 0.0;
      if (f >= lo && f <= mid && mid > lo) {
        w = (f - lo) / (mid - lo);
      } else if (f > mid && f <= hi && hi > mid) {
        w = (hi - f) / (hi - mid);
      }
      fb[m][b] = w;
    }
  }
  return fb;
}

// +-2 frame linear regression with edge replication.
Mat<double> delta(const Mat<double>& x) {
  Mat<double> d(x.rows, x.cols);
  const int64_t n = x.rows;
  auto idx = [n](int64_t i) { return std::clamp<int64_t>(i, 0, n - 1); };
  for (int64_t t = 0; t < n; ++t) {
    for (int64_t c = 0; c < x.cols; ++c) {
      double num = 0.0;
      for (int k = 1; k <= 2; ++k) {
        num += k * (x[idx(t + k)][c] - x[idx(t - k)][c]);
      }
      d[t][c] = num / 10.0;  // 2 * (1^2 + 2^2)
    }
  }
  return d;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw UsageError("fft size must be a power of two");
  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * kPi / double(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= double(n);
  }
}

Spectrogram stft(const Waveform& wave, const SpectralConfig& cfg) {
  if (cfg.frame_length > cfg.fft_bins) {
    throw UsageError("stft: frame_length exceeds fft_bins");
  }
  if (cfg.stride < 1) throw UsageError("stft: stride must be >= 1");
  int64_t n = int64_t(wave.samples.size());
  int64_t frames = frame_count(n, cfg.frame_length, cfg.stride);
  if (frames < 0) throw UsageError("stft: signal shorter than one frame");

  const int n_bins = cfg.fft_bins / 2 + 1;
  Spectrogram out;
  out.config = cfg;
  out.power = Mat<double>(n_bins, frames);

  auto window = hann_periodic(cfg.frame_length);
  std::vector<std::complex<double>> buf(size_t(cfg.fft_bins));
  for (int64_t l = 0; l < frames; ++l) {
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    const double* src = wave.samples.data() + l * cfg.stride;
    for (int i = 0; i < cfg.frame_length; ++i) {
      buf[size_t(i)] = src[i] * window[size_t(i)];
    }
    fft_inplace(buf);
    for (int b = 0; b < n_bins; ++b) out.power[b][l] = std::norm(buf[size_t(b)]);
  }
  return out;
}

FeatureSequence compute_mfcc(const Waveform& wave) {
  int64_t n = int64_t(wave.samples.size());
  if (n < kMfccWindow) {
    throw UsageError("compute_mfcc: waveform shorter than one 25 ms window");
  }
  int64_t frames = frame_count(n, kMfccWindow, kMfccStride);

  // Pre-emphasis over the whole signal keeps frames shift-covariant.
  std::vector<double> emph(size_t(n));
  emph[0] = wave.samples[0] * (1.0 - kPreEmphasis);
  for (int64_t t = 1; t < n; ++t) {
    emph[size_t(t)] = wave.samples[size_t(t)] - kPreEmphasis * wave.samples[size_t(t - 1)];
  }

  static const Mat<double> fb = mel_filterbank(kMfccFft, kSampleRate);
  auto window = hann_symmetric(kMfccWindow);
  const int n_bins = kMfccFft / 2 + 1;

  Mat<double> cepstra(frames, kNumCepstra);
  std::vector<std::complex<double>> buf(size_t(kMfccFft));
  std::vector<double> power(size_t(n_bins)), mel(kNumMelFilters);
  for (int64_t t = 0; t < frames; ++t) {
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    const double* src = emph.data() + t * kMfccStride;
    for (int i = 0; i < kMfccWindow; ++i) buf[size_t(i)] = src[i] * window[size_t(i)];
    fft_inplace(buf);
    for (int b = 0; b < n_bins; ++b) power[size_t(b)] = std::norm(buf[size_t(b)]);

    for (int m = 0; m < kNumMelFilters; ++m) {
      double acc = 0.0;
      const double* w = fb[m];
      for (int b = 0; b < n_bins; ++b) acc += w[b] * power[size_t(b)];
      mel[size_t(m)] = std::log(std::max(acc, kLogFloor));
    }
    // DCT-II, coefficients 0..12
    for (int i = 0; i < kNumCepstra; ++i) {
      double acc = 0.0;
      for (int m = 0; m < kNumMelFilters; ++m) {
        acc += mel[size_t(m)] * std::cos(kPi * i * (m + 0.5) / kNumMelFilters);
      }
      cepstra[t][i] = acc * std::sqrt(2.0 / kNumMelFilters);
    }
  }

  Mat<double> d1 = delta(cepstra);
  Mat<double> d2 = delta(d1);

  FeatureSequence out;
  out.frames = Mat<double>(frames, kFeatureDim);
  for (int64_t t = 0; t < frames; ++t) {
    for (int i = 0; i < kNumCepstra; ++i) {
      out.frames[t][i] = cepstra[t][i];
      out.frames[t][kNumCepstra + i] = d1[t][i];
      out.frames[t][2 * kNumCepstra + i] = d2[t][i];
    }
  }
  return out;
}

F0Contour estimate_f0(const Waveform& wave) {
  constexpr int kWin = 400, kHop = 160;
  constexpr double kFloorHz = 60.0, kCeilHz = 400.0, kVoicingThreshold = 0.45;
  const int lag_min = int(std::floor(kSampleRate / kCeilHz));  // 40
  const int lag_max = int(std::floor(kSampleRate / kFloorHz));  // 266

  F0Contour out;
  int64_t n = int64_t(wave.samples.size());
  int64_t frames = frame_count(n, kWin, kHop);
  if (frames < 0) frames = 0;
  out.f0_hz.assign(size_t(frames), 0.0);

  std::vector<double> r(size_t(lag_max + 2), 0.0);
  for (int64_t t = 0; t < frames; ++t) {
    const double* x = wave.samples.data() + t * kHop;
    double mean = 0.0;
    for (int i = 0; i < kWin; ++i) mean += x[i];
    mean /= kWin;

    double r0 = 0.0;
    for (int i = 0; i < kWin; ++i) r0 += (x[i] - mean) * (x[i] - mean);
    if (r0 < 1e-12) continue;  // silence -> unvoiced

    // Length-compensated (unbiased) normalized autocorrelation.
    for (int lag = lag_min - 1; lag <= lag_max + 1; ++lag) {
      double acc = 0.0;
      for (int i = 0; i + lag < kWin; ++i) {
        acc += (x[i] - mean) * (x[i + lag] - mean);
      }
      r[size_t(lag - lag_min + 1)] = acc / (r0 * (kWin - lag) / double(kWin));
    }

    int best = -1;
    double best_v = kVoicingThreshold;
    for (int lag = lag_min; lag <= lag_max; ++lag) {
      double v = r[size_t(lag - lag_min + 1)];
      if (v > best_v) {
        best_v = v;
        best = lag;
      }
    }
    if (best < 0) continue;

    // Parabolic refinement around the peak lag.
    double y0 = r[size_t(best - lag_min)], y1 = r[size_t(best - lag_min + 1)],
           y2 = r[size_t(best - lag_min + 2)];
    double denom = y0 - 2.0 * y1 + y2;
    double shift = 0.0;
    if (std::fabs(denom) > 1e-12) shift = std::clamp(0.5 * (y0 - y2) / denom, -0.5, 0.5);
    double f0 = kSampleRate / (double(best) + shift);
    out.f0_hz[size_t(t)] = std::clamp(f0, kFloorHz, kCeilHz);
  }
  return out;
}

}  // namespace zerovoc::dsp
