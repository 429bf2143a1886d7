// Copyright 2026 The zerovoc Authors
// Reverse-mode automatic differentiation over 2-D tensors.
//
// Tensors are shared handles onto value/grad storage. Ops record onto the
// innermost active Tape (a thread_local stack); with no tape active, or when
// no input requires a gradient, ops compute values only. A tape is
// single-threaded; independent tapes may run on different threads.
//
// Instantiated for float (training) and double (tests, gradient checks).
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zerovoc/mat.hpp"

namespace zerovoc::ad {

template <class T>
struct NodeT {
  Mat<T> value;
  Mat<T> grad;  // allocated lazily; persists across tapes for parameters
  bool requires_grad = false;
  std::string name;
  std::vector<std::shared_ptr<NodeT<T>>> parents;
  std::function<void(NodeT<T>&)> backward_fn;

  void ensure_grad() {
    if (!grad.same_shape(value)) grad = Mat<T>(value.rows, value.cols);
  }
};

template <class T>
class TensorT {
 public:
  TensorT() = default;
  explicit TensorT(std::shared_ptr<NodeT<T>> n) : n_(std::move(n)) {}

  // Leaf that accumulates gradients (a trainable parameter).
  static TensorT param(Mat<T> value, std::string name);
  // Leaf without gradients.
  static TensorT constant(Mat<T> value);
  static TensorT scalar(T value);

  bool defined() const { return n_ != nullptr; }
  const Mat<T>& value() const { return n_->value; }
  Mat<T>& mutable_value() { return n_->value; }
  Mat<T>& grad() { return n_->grad; }
  const Mat<T>& grad() const { return n_->grad; }
  bool requires_grad() const { return n_ && n_->requires_grad; }
  const std::string& name() const { return n_->name; }
  int64_t rows() const { return n_->value.rows; }
  int64_t cols() const { return n_->value.cols; }
  T item() const { return n_->value.data.at(0); }

  void zero_grad() {
    n_->ensure_grad();
    n_->grad.fill(T(0));
  }

  std::shared_ptr<NodeT<T>> node() const { return n_; }

 private:
  std::shared_ptr<NodeT<T>> n_;
};

// Records nodes in creation order; activates itself on construction.
template <class T>
class TapeT {
 public:
  TapeT();
  ~TapeT();
  TapeT(const TapeT&) = delete;
  TapeT& operator=(const TapeT&) = delete;

  // Reverse-mode accumulation from a scalar loss. `seed` is the incoming
  // cotangent (useful for averaging losses across segments).
  void backward(const TensorT<T>& loss, T seed = T(1));

  size_t size() const { return nodes_.size(); }
  void record(std::shared_ptr<NodeT<T>> n) { nodes_.push_back(std::move(n)); }

 private:
  std::vector<std::shared_ptr<NodeT<T>>> nodes_;
};

// When enabled, every op validates that its output is finite and throws
// NumericError naming the op otherwise. Off by default (training checks the
// loss instead).
void set_check_finite(bool on);
bool check_finite_enabled();

// ---- elementwise & broadcast ----
template <class T> TensorT<T> add(const TensorT<T>& a, const TensorT<T>& b);
template <class T> TensorT<T> sub(const TensorT<T>& a, const TensorT<T>& b);
template <class T> TensorT<T> mul(const TensorT<T>& a, const TensorT<T>& b);
template <class T> TensorT<T> div(const TensorT<T>& a, const TensorT<T>& b);
template <class T> TensorT<T> scale(const TensorT<T>& x, T k);
template <class T> TensorT<T> add_const(const TensorT<T>& x, T k);
template <class T> TensorT<T> neg(const TensorT<T>& x);
// X [m x n] + v [1 x n], broadcast over rows.
template <class T> TensorT<T> add_rowvec(const TensorT<T>& x, const TensorT<T>& v);
// X [m x n] + b [m x 1], broadcast over columns.
template <class T> TensorT<T> add_colvec(const TensorT<T>& x, const TensorT<T>& b);

// ---- nonlinearities ----
template <class T> TensorT<T> log(const TensorT<T>& x);
template <class T> TensorT<T> exp(const TensorT<T>& x);
template <class T> TensorT<T> sin(const TensorT<T>& x);
template <class T> TensorT<T> tanh(const TensorT<T>& x);
template <class T> TensorT<T> sigmoid(const TensorT<T>& x);
// x*log(x) with 0 log 0 := 0.
template <class T> TensorT<T> xlogx(const TensorT<T>& x);
template <class T> TensorT<T> clamp(const TensorT<T>& x, T lo, T hi);
template <class T> TensorT<T> softmax_rows(const TensorT<T>& x);

// ---- structure ----
template <class T> TensorT<T> matmul(const TensorT<T>& a, const TensorT<T>& b);
template <class T> TensorT<T> transpose(const TensorT<T>& x);
template <class T> TensorT<T> concat_cols(const TensorT<T>& a, const TensorT<T>& b);
template <class T> TensorT<T> slice_cols(const TensorT<T>& x, int64_t lo, int64_t hi);
template <class T> TensorT<T> stack_rows(const std::vector<TensorT<T>>& rows);
template <class T> TensorT<T> gather_rows(const TensorT<T>& x, std::vector<int64_t> idx);

// ---- reductions ----
template <class T> TensorT<T> sum_all(const TensorT<T>& x);
template <class T> TensorT<T> mean_all(const TensorT<T>& x);
template <class T> TensorT<T> row_sum(const TensorT<T>& x);  // [m x n] -> [m x 1]
template <class T> TensorT<T> cumsum_row(const TensorT<T>& x);  // along each row

// ---- convolution ----
// x [Cin x T], w [Cout x Cin*k] (w[co][ci*k+j]); output column t reads input
// position t - pad_left + j*dilation.
template <class T>
TensorT<T> conv1d(const TensorT<T>& x, const TensorT<T>& w, int kernel,
                  int dilation, int pad_left, int pad_right);

// x [Cin x S], w [Cin x Cout*k] (w[ci][co*k+j]); stride*S output columns after
// trimming (k - stride)/2 from each side of the full transposed convolution.
// Requires k >= stride and k - stride even.
template <class T>
TensorT<T> transposed_conv1d(const TensorT<T>& x, const TensorT<T>& w,
                             int stride, int kernel, int out_channels);

// Fused y = x + tanh(dilated_conv(x, w) + v*cond + b); the hot path of the
// vocoder filter stacks. kernel is fixed at 3.
template <class T>
TensorT<T> wavenet_layer(const TensorT<T>& x, const TensorT<T>& cond,
                         const TensorT<T>& w, const TensorT<T>& v,
                         const TensorT<T>& b, int dilation);

// ---- recurrent ----
// Gate order i, f, g, o. x [1 x I], h/c [1 x H], wx [I x 4H], wh [H x 4H],
// b [1 x 4H]. Returns (h_next, c_next).
template <class T>
std::pair<TensorT<T>, TensorT<T>> lstm_cell(const TensorT<T>& x,
                                            const TensorT<T>& h_prev,
                                            const TensorT<T>& c_prev,
                                            const TensorT<T>& wx,
                                            const TensorT<T>& wh,
                                            const TensorT<T>& b);

// ---- spectral ----
// Hann-windowed DFT power frames of a [1 x T] signal: output [L x bins/2+1].
// Matches dsp::stft bit for bit (transposed layout).
template <class T>
TensorT<T> rfft_power(const TensorT<T>& x, int fft_bins, int frame_length,
                      int stride);

// ---- Dirichlet machinery ----
// E[log pi_k] under Dirichlet(omega): psi(omega_k) - psi(sum omega).
template <class T>
TensorT<T> dirichlet_expected_log(const TensorT<T>& omega);
// KL(Dirichlet(omega) || Dirichlet(alpha)) as a scalar tensor.
template <class T>
TensorT<T> kl_dirichlet_op(const TensorT<T>& omega, const Mat<T>& alpha);

double digamma(double x);
double trigamma(double x);

// ---- verification ----
// Central finite differences against reverse-mode gradients, probing up to
// `probes` random coordinates per differentiable input. Returns the max
// relative error. The builder must be deterministic in its inputs.
double gradient_check(
    const std::function<TensorT<double>(const std::vector<TensorT<double>>&)>& build,
    const std::vector<Mat<double>>& inputs, uint64_t probe_seed,
    int probes = 32, double h = 1e-5);

using Tensor = TensorT<double>;
using Tape = TapeT<double>;
using TensorF = TensorT<float>;
using TapeF = TapeT<float>;

}  // namespace zerovoc::ad
