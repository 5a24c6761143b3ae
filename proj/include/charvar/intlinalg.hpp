#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace charvar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMat transposed() const;
  IntMat operator*(const IntMat& other) const;
  bool operator==(const IntMat& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Fraction-free (Bareiss) determinant; matrix must be square.
Int determinant(IntMat m);

/// Rank over Q via fraction-free integer row reduction.
std::size_t rank(IntMat m);

/// Diagonal of the Smith normal form, nonnegative, with the divisibility
/// chain d1 | d2 | ... Trailing zeros for rank deficiency are included.
std::vector<Int> smith_invariants(IntMat m);

/// Basis of the rational kernel {x : m x = 0}, each vector scaled to a
/// primitive integer vector.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

/// The primitive integer kernel vector of a matrix with one-dimensional
/// kernel (sign unspecified). Throws InvariantViolation otherwise.
std::vector<Int> primitive_kernel_vector(const IntMat& m);

}  // namespace charvar
