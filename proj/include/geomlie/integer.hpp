// Exact integer vectors and matrices.
//
// Every arithmetic operation is overflow-checked; an overflow throws
// OverflowError instead of wrapping. Entries in this library stay tiny,
// but the contract is exactness.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace geomlie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

using IntVector = std::vector<std::int64_t>;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Dense row-major integer matrix. Operators act on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> to_rows() const;

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix scaled(std::int64_t s) const;
  IntVector apply(std::span<const std::int64_t> v) const;

  IntMatrix power(unsigned e) const;

  bool is_identity() const;
  bool is_symmetric() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  // Exact determinant by fraction-free (Bareiss) elimination with
  // 128-bit intermediates; fine for the small lattice matrices here.
  std::int64_t determinant() const;

  // Smallest m >= 1 with M^m = I, or 0 if none up to `limit`.
  unsigned order(unsigned limit = 1000) const;

  // Exact inverse of a unimodular matrix; throws if det != +-1.
  IntMatrix unimodular_inverse() const;

  // All leading principal minors strictly positive (Sylvester).
  bool is_positive_definite() const;

  bool operator==(const IntMatrix& o) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Exact determinant of an arbitrary-size integer matrix via modular
// elimination and Chinese remaindering against the Hadamard bound.
BigInt exact_determinant(const IntMatrix& m);

}  // namespace geomlie
