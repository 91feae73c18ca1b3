#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace twotower {

// Dense row-major matrix of 64-bit floats. Row-major layout is fixed so file
// round-trips are bit-exact. Constructors that accept data validate that
// every entry is finite.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero-filled
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<double> span() { return data_; }
  std::span<const double> span() const { return data_; }

  bool all_finite() const;
  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  // Rows [begin, end) as a new matrix.
  Matrix slice_rows(std::size_t begin, std::size_t end) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// Scales every row to Euclidean norm 1. A row with norm <= eps throws
// DegenerateRowError: eps is an error floor, not a clamp.
Matrix l2_normalize_rows(const Matrix& m, double eps = 1e-12);

// Row-wise softmax with per-row max subtraction.
Matrix stable_softmax_rows(const Matrix& logits);

// max(v) + log(sum(exp(v - max(v))))
double logsumexp_row(std::span<const double> v);

// logsumexp of every row.
std::vector<double> logsumexp_rows(const Matrix& m);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace twotower
