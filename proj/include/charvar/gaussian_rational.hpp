#pragma once

#include <array>
#include <string>
#include <vector>

#include "charvar/intlinalg.hpp"

namespace charvar {

/// Exact element of Q(i).
struct GaussianRational {
  Rat re{0};
  Rat im{0};

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}
  GaussianRational(Rat r, Rat i = Rat(0)) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianRational&) const = default;

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const;
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  std::string to_string() const;
};

using QI = GaussianRational;

/// 2x2 matrix over Q(i), row major: {a, b, c, d}.
struct Mat2 {
  QI a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  bool operator==(const Mat2&) const = default;

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 scaled(const QI& s) const { return {a * s, b * s, c * s, d * s}; }
  QI det() const { return a * d - b * c; }
  QI trace() const { return a + d; }
  Mat2 inverse() const;
};

/// Dense matrix over Q(i).
class QIMatrix {
 public:
  QIMatrix() : rows_(0), cols_(0) {}
  QIMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QI& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QI& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool operator==(const QIMatrix&) const = default;

  std::vector<QI> apply(const std::vector<QI>& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<QI> data_;
};

/// Rank over the field Q(i), exact Gaussian elimination.
std::size_t rank(QIMatrix m);

}  // namespace charvar
