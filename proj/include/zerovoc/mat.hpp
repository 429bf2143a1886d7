// Copyright 2026 The zerovoc Authors
// Dense row-major matrix, the storage type behind tensors and DSP buffers.
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace zerovoc {

template <class T>
struct Mat {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<T> data;  // row-major, rows*cols entries

  Mat() = default;
  Mat(int64_t r, int64_t c) : rows(r), cols(c), data(size_t(r * c), T(0)) {}
  Mat(int64_t r, int64_t c, T fill)
      : rows(r), cols(c), data(size_t(r * c), fill) {}

  int64_t size() const { return rows * cols; }
  bool empty() const { return size() == 0; }

  T* operator[](int64_t r) { return data.data() + r * cols; }
  const T* operator[](int64_t r) const { return data.data() + r * cols; }

  T& at(int64_t r, int64_t c) {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return data[size_t(r * cols + c)];
  }
  T at(int64_t r, int64_t c) const {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return data[size_t(r * cols + c)];
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  bool same_shape(const Mat& o) const {
    return rows == o.rows && cols == o.cols;
  }

  template <class U>
  Mat<U> cast() const {
    Mat<U> out(rows, cols);
    for (int64_t i = 0; i < size(); ++i) out.data[size_t(i)] = U(data[size_t(i)]);
    return out;
  }
};

using Matd = Mat<double>;
using Matf = Mat<float>;

}  // namespace zerovoc
