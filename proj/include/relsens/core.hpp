#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relsens {

inline constexpr const char* kVersion = "0.1.0";

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class FitError : public Error {
public:
  using Error::Error;
};

class IntegrationError : public Error {
public:
  using Error::Error;
};

class EstimationError : public Error {
public:
  using Error::Error;
};

/// Transform failure; carries the offending coordinate (and sample row when
/// the failure happened inside a batch transform).
class TransformError : public Error {
public:
  TransformError(const std::string& msg, std::size_t coordinate, std::ptrdiff_t row = -1)
      : Error(msg), coordinate_(coordinate), row_(row) {}
  std::size_t coordinate() const { return coordinate_; }
  std::ptrdiff_t row() const { return row_; }

private:
  std::size_t coordinate_;
  std::ptrdiff_t row_;
};

class EvaluatorError : public Error {
public:
  using Error::Error;
};

/// Dense row-major matrix of doubles. Rows are observations, columns are
/// coordinates. Kept deliberately minimal; heavy linear algebra goes through
/// Eigen inside the implementation files.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void append_row(std::span<const double> values) {
    if (cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error("append_row: column count mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  /// New matrix holding the listed rows (used by bootstrap resampling).
  Matrix take_rows(std::span<const std::size_t> indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      auto src = row(indices[i]);
      std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
  }

  /// New matrix holding the listed columns, in the given order.
  Matrix take_columns(std::span<const std::size_t> cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    return out;
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace relsens
