#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "dessl/error.hpp"

namespace dessl {

// Pairwise (fixed-tree) summation: order-independent of how trials were
// produced, deterministic for a given array.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

inline double mean_of(std::span<const double> v) {
  if (v.empty()) throw UsageError("mean of empty sample");
  return pairwise_sum(v) / static_cast<double>(v.size());
}

// Unbiased (n-1) sample variance, two-pass.
inline double sample_variance(std::span<const double> v) {
  if (v.size() < 2) throw UsageError("variance needs at least two samples");
  const double m = mean_of(v);
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = v[i] - m;
    sq[i] = d * d;
  }
  return pairwise_sum(sq) / static_cast<double>(v.size() - 1);
}

inline double sample_covariance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw UsageError("covariance needs equal-length samples");
  if (a.size() < 2) throw UsageError("covariance needs at least two samples");
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  std::vector<double> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prod[i] = (a[i] - ma) * (b[i] - mb);
  return pairwise_sum(prod) / static_cast<double>(a.size() - 1);
}

inline double standard_error_of_mean(std::span<const double> v) {
  return std::sqrt(sample_variance(v) / static_cast<double>(v.size()));
}

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace dessl
