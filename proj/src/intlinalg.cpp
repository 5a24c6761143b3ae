#include "charvar/intlinalg.hpp"

#include <algorithm>
#include <numeric>

#include "charvar/errors.hpp"

namespace charvar {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows()) throw InvariantViolation("IntMat: shape mismatch in product");
  IntMat p(rows_, other.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) p.at(i, j) += v * other.at(k, j);
    }
  return p;
}

Int determinant(IntMat m) {
  if (m.rows() != m.cols()) throw InvariantViolation("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::size_t rank(IntMat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (std::size_t i = r + 1; i < rows; ++i)
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
    prev = m.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) m.at(i, c) = 0;
    ++r;
  }
  return r;
}

std::vector<Int> smith_invariants(IntMat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<Int> diag(n, 0);
  std::size_t t = 0;
  while (t < n) {
    // Locate a nonzero pivot in the trailing submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          clean = false;
        }
      }
      if (clean) {
        // Enforce divisibility of the remaining entries by the pivot.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m.at(i, j) % m.at(t, t) != 0) {
              for (std::size_t jj = 0; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
              clean = false;
            }
      }
    }
    diag[t] = m.at(t, t) < 0 ? Int(-m.at(t, t)) : m.at(t, t);
    ++t;
  }
  return diag;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Gauss-Jordan over Q.
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
    // Clear denominators and divide by the content.
    Int lcm = 1;
    for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
    std::vector<Int> w(cols);
    Int g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      w[j] = Int(numerator(v[j])) * (lcm / Int(denominator(v[j])));
      g = boost::multiprecision::gcd(g, w[j]);
    }
    if (g > 1)
      for (Int& x : w) x /= g;
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Int> primitive_kernel_vector(const IntMat& m) {
  auto basis = kernel_basis(m);
  if (basis.size() != 1)
    throw InvariantViolation("primitive_kernel_vector: kernel is not one-dimensional");
  return basis[0];
}

}  // namespace charvar
