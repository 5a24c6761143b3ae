#include "charvar/gaussian_rational.hpp"

#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

GaussianRational GaussianRational::inverse() const {
  Rat norm = re * re + im * im;
  if (norm == 0) throw InvariantViolation("division by zero in Q(i)");
  return {re / norm, -im / norm};
}

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    os << im << "i";
  } else {
    os << re << (im > 0 ? "+" : "") << im << "i";
  }
  return os.str();
}

Mat2 Mat2::inverse() const {
  QI dt = det();
  if (dt.is_zero()) throw InvariantViolation("singular 2x2 matrix");
  QI inv = dt.inverse();
  return {d * inv, (-b) * inv, (-c) * inv, a * inv};
}

std::vector<QI> QIMatrix::apply(const std::vector<QI>& v) const {
  if (v.size() != cols_) throw InvariantViolation("QIMatrix::apply: size mismatch");
  std::vector<QI> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::size_t rank(QIMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    QI inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      QI f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace charvar
