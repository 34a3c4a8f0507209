#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dessl/error.hpp"

namespace dessl {

// Dense row-major matrix of doubles. The one value container shared by the
// dataset, the classifiers' value paths and the metrics.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
  Matrix(std::size_t r, std::size_t c, std::vector<double> values)
      : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != rows * cols) throw ConfigError("matrix data does not match rows*cols");
  }

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double* row(std::size_t i) { return data.data() + i * cols; }
  std::size_t size() const { return data.size(); }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), cols);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const double* src = row(idx[k]);
      double* dst = out.row(k);
      for (std::size_t j = 0; j < cols; ++j) dst[j] = src[j];
    }
    return out;
  }
};

}  // namespace dessl
