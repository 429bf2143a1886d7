// Copyright 2026 The zerovoc Authors
// RIFF WAV reader/writer.
//
// Licensed under the Apache License, Version 2.0

#include "zerovoc/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace zerovoc {

namespace {

uint32_t read_u32(const unsigned char* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

uint16_t read_u16(const unsigned char* p) {
  return uint16_t(p[0]) | uint16_t(p[1]) << 8;
}

void put_u32(std::string& s, uint32_t v) {
  s.push_back(char(v & 0xff));
  s.push_back(char((v >> 8) & 0xff));
  s.push_back(char((v >> 16) & 0xff));
  s.push_back(char((v >> 24) & 0xff));
}

void put_u16(std::string& s, uint16_t v) {
  s.push_back(char(v & 0xff));
  s.push_back(char((v >> 8) & 0xff));
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open WAV file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw UsageError("not a RIFF/WAVE file: " + path);
  }

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t data_off = 0, data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    uint32_t chunk_len = read_u32(hdr + 4);
    size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) break;
    if (std::memcmp(hdr, "fmt ", 4) == 0 && chunk_len >= 16) {
      format = read_u16(bytes.data() + body);
      channels = read_u16(bytes.data() + body + 2);
      rate = read_u32(bytes.data() + body + 4);
      bits = read_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_off = body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_off == 0) {
    throw UsageError("WAV missing fmt/data chunk: " + path);
  }
  if (format != 1 || channels != 1 || bits != 16 || rate != kSampleRate) {
    throw UsageError("unsupported WAV format (need PCM s16le mono 16 kHz): " +
                     path);
  }

  Waveform wave;
  wave.sample_rate = int(rate);
  size_t n = data_len / 2;
  wave.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int16_t v = int16_t(read_u16(bytes.data() + data_off + 2 * i));
    wave.samples[i] = double(v) / 32768.0;
  }
  return wave;
}

void write_wav(const std::string& path, const Waveform& wave, bool normalize) {
  double scale = 1.0;
  if (normalize) {
    double peak = 0.0;
    for (double s : wave.samples) peak = std::max(peak, std::fabs(s));
    if (peak > 0.0) scale = 0.95 / peak;
  }

  std::string out;
  out.reserve(44 + wave.samples.size() * 2);
  uint32_t data_len = uint32_t(wave.samples.size() * 2);
  out.append("RIFF");
  put_u32(out, 36 + data_len);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, uint32_t(wave.sample_rate));
  put_u32(out, uint32_t(wave.sample_rate) * 2);  // byte rate
  put_u16(out, 2);                               // block align
  put_u16(out, 16);                              // bits
  out.append("data");
  put_u32(out, data_len);
  for (double s : wave.samples) {
    double v = std::clamp(s * scale, -1.0, 1.0);
    int16_t q = int16_t(std::lrint(v * 32767.0));
    put_u16(out, uint16_t(q));
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write WAV file: " + path);
  f.write(out.data(), std::streamsize(out.size()));
}

}  // namespace zerovoc
