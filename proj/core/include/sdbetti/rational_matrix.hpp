#pragma once

// Dense matrices over the rationals (GMP).

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sdbetti {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<mpq_class> row(std::size_t r) const;
  [[nodiscard]] std::vector<mpq_class> col(std::size_t c) const;

  [[nodiscard]] QMatrix transpose() const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  /// Row vector times matrix.
  friend std::vector<mpq_class> operator*(const std::vector<mpq_class>& v, const QMatrix& m);

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  [[nodiscard]] std::size_t rank() const;
  /// Basis of {x : Ax = 0}, one vector per free column, with a 1 in that column.
  [[nodiscard]] std::vector<std::vector<mpq_class>> kernel() const;
  /// Gauss-Jordan inverse. Throws InvalidArgument if singular or not square.
  [[nodiscard]] QMatrix inverse() const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

}  // namespace sdbetti
