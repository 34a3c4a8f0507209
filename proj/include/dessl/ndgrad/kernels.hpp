#pragma once

#include <cmath>
#include <cstddef>

#include "dessl/error.hpp"

namespace dessl::ndgrad::kernels {

// Raw forward kernels. The graph ops and the no-graph value paths both call
// these, which is what makes the two paths bit-identical.

// out[n x k] = x[n x d] * w[d x k] + b[k]
inline void affine(const double* x, std::size_t n, std::size_t d, const double* w, std::size_t k,
                   const double* b, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    double* oi = out + i * k;
    for (std::size_t j = 0; j < k; ++j) oi[j] = b[j];
    for (std::size_t p = 0; p < d; ++p) {
      const double xv = xi[p];
      const double* wrow = w + p * k;
      for (std::size_t j = 0; j < k; ++j) oi[j] += xv * wrow[j];
    }
  }
}

inline void relu(const double* x, std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

// Row-wise log-softmax with max subtraction. Throws on non-finite input.
inline void log_softmax(const double* x, std::size_t n, std::size_t c, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * c;
    double* oi = out + i * c;
    double m = xi[0];
    for (std::size_t j = 0; j < c; ++j) {
      if (!std::isfinite(xi[j])) throw NumericError("log_softmax: non-finite input");
      if (xi[j] > m) m = xi[j];
    }
    double z = 0.0;
    for (std::size_t j = 0; j < c; ++j) z += std::exp(xi[j] - m);
    const double lse = m + std::log(z);
    for (std::size_t j = 0; j < c; ++j) oi[j] = xi[j] - lse;
  }
}

inline void exponent(const double* x, std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(x[i]);
}

}  // namespace dessl::ndgrad::kernels
