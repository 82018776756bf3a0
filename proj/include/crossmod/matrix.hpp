#pragma once
// Dense row-major matrices, row reduction, kernels and linear solves.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossmod/scalar.hpp"

namespace crossmod {

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Mat diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  const std::vector<Scalar>& entries() const { return data_; }

  Mat transpose() const;
  bool is_zero() const;
  bool is_antisymmetric() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(const Mat& a);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, Mat a);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;                       ///< nonzero rows only
  std::vector<std::size_t> pivots;   ///< strictly increasing pivot columns
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
Scalar determinant(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// Throws PreconditionError when singular.
Mat inverse_or_throw(const Mat& m, const std::string& what);

}  // namespace crossmod
