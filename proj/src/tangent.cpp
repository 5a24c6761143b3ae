#include "charvar/tangent.hpp"

#include "charvar/errors.hpp"

namespace charvar {

namespace {

const Mat2 kH{1, 0, 0, -1};
const Mat2 kE{0, 1, 0, 0};
const Mat2 kF{0, 0, 1, 0};

Mat2 commutator(const Mat2& x, const Mat2& y) {
  return x * y * x.inverse() * y.inverse();
}

QIMatrix mat3_product(const QIMatrix& x, const QIMatrix& y) {
  QIMatrix p(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) p.at(i, j) += x.at(i, k) * y.at(k, j);
  return p;
}

/// First-order 2x2 matrices: value + epsilon * slope, with epsilon^2 = 0.
struct DualMat2 {
  Mat2 val, eps;

  DualMat2 operator*(const DualMat2& o) const {
    return {val * o.val, val * o.eps + eps * o.val};
  }
  DualMat2 inverse() const {
    Mat2 vi = val.inverse();
    Mat2 neg = vi * eps * vi;
    return {vi, {-neg.a, -neg.b, -neg.c, -neg.d}};
  }
};

DualMat2 dual_commutator(const DualMat2& x, const DualMat2& y) {
  return x * y * x.inverse() * y.inverse();
}

}  // namespace

void validate_tuple(const SurfaceTuple& t) {
  if (t.g < 2) throw ValidationError("surface tuple requires genus >= 2");
  if (static_cast<int>(t.pairs.size()) != t.g)
    throw ValidationError("surface tuple must have g handle pairs");
  if (t.twist != 1 && t.twist != -1)
    throw ValidationError("twist must be +1 or -1");
  Mat2 prod = Mat2::identity();
  for (const auto& [a, b] : t.pairs) {
    if (!(a.det() == QI(1)) || !(b.det() == QI(1)))
      throw ValidationError("surface tuple matrices must have determinant 1");
    prod = prod * commutator(a, b);
  }
  prod = prod.scaled(QI(t.twist));
  if (!(prod == Mat2::identity()))
    throw ValidationError("twisted product of commutators is not the identity");
}

SurfaceTuple quaternion_tuple(int g, bool twisted) {
  if (g < 2) throw ValidationError("quaternion_tuple requires genus >= 2");
  const Mat2 a{QI::i(), 0, 0, -QI::i()};
  const Mat2 b{0, 1, -1, 0};
  SurfaceTuple t;
  t.g = g;
  t.twist = twisted ? -1 : 1;
  int nontrivial = twisted ? 1 : 2;
  for (int i = 0; i < g; ++i) {
    if (i < nontrivial)
      t.pairs.emplace_back(a, b);
    else
      t.pairs.emplace_back(Mat2::identity(), Mat2::identity());
  }
  validate_tuple(t);
  return t;
}

SurfaceTuple identity_tuple(int g) {
  SurfaceTuple t;
  t.g = g;
  t.twist = 1;
  for (int i = 0; i < g; ++i) t.pairs.emplace_back(Mat2::identity(), Mat2::identity());
  validate_tuple(t);
  return t;
}

std::array<QI, 3> sl2_coords(const Mat2& x) {
  if (!(x.trace() == QI(0))) throw InvariantViolation("sl2_coords: matrix is not traceless");
  return {x.a, x.b, x.c};
}

Mat2 sl2_from_coords(const std::array<QI, 3>& c) {
  return {c[0], c[1], c[2], -c[0]};
}

QIMatrix ad_operator(const Mat2& m) {
  QIMatrix ad(3, 3);
  Mat2 mi = m.inverse();
  const Mat2 basis[3] = {kH, kE, kF};
  for (int j = 0; j < 3; ++j) {
    auto col = sl2_coords(m * basis[j] * mi);
    for (int i = 0; i < 3; ++i) ad.at(i, j) = col[i];
  }
  return ad;
}

long centralizer_dim(const SurfaceTuple& t) {
  validate_tuple(t);
  QIMatrix stacked(6 * t.g, 3);
  std::size_t row = 0;
  for (const auto& [a, b] : t.pairs)
    for (const Mat2* m : {&a, &b}) {
      QIMatrix ad = ad_operator(*m);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) stacked.at(row, j) = ad.at(i, j) - QI(i == j ? 1 : 0);
        ++row;
      }
    }
  return 3 - static_cast<long>(rank(stacked));
}

QIMatrix dmu_matrix(const SurfaceTuple& t) {
  validate_tuple(t);
  QIMatrix out(3, 6 * t.g);
  QIMatrix prefix(3, 3);
  for (int i = 0; i < 3; ++i) prefix.at(i, i) = 1;
  for (int i = 0; i < t.g; ++i) {
    const auto& [a, b] = t.pairs[i];
    QIMatrix s = ad_operator(a);
    QIMatrix tau = ad_operator(b);
    QIMatrix h = ad_operator(commutator(a, b));
    QIMatrix ht = mat3_product(h, tau);
    QIMatrix fblock(3, 3), gblock(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        fblock.at(r, c) = QI(r == c ? 1 : 0) - ht.at(r, c);
        gblock.at(r, c) = s.at(r, c) - h.at(r, c);
      }
    fblock = mat3_product(prefix, fblock);
    gblock = mat3_product(prefix, gblock);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        out.at(r, 6 * i + c) = fblock.at(r, c);
        out.at(r, 6 * i + 3 + c) = gblock.at(r, c);
      }
    prefix = mat3_product(prefix, h);
  }
  return out;
}

long tangent_dim(const SurfaceTuple& t) {
  return 6L * t.g - static_cast<long>(rank(dmu_matrix(t)));
}

bool first_order_matches(const SurfaceTuple& t, const std::vector<Mat2>& a,
                         const std::vector<Mat2>& b) {
  validate_tuple(t);
  if (static_cast<int>(a.size()) != t.g || static_cast<int>(b.size()) != t.g)
    throw ValidationError("direction must have g entries per block");

  DualMat2 prod{Mat2::identity(), {}};
  for (int i = 0; i < t.g; ++i) {
    DualMat2 x{t.pairs[i].first, a[i] * t.pairs[i].first};
    DualMat2 y{t.pairs[i].second, b[i] * t.pairs[i].second};
    prod = prod * dual_commutator(x, y);
  }
  prod.val = prod.val.scaled(QI(t.twist));
  prod.eps = prod.eps.scaled(QI(t.twist));
  if (!(prod.val == Mat2::identity()))
    throw InvariantViolation("first_order_matches: base relation does not hold");

  auto lhs = sl2_coords(prod.eps);
  std::vector<QI> v;
  for (int i = 0; i < t.g; ++i) {
    for (const QI& c : sl2_coords(a[i])) v.push_back(c);
    for (const QI& c : sl2_coords(b[i])) v.push_back(c);
  }
  auto rhs = dmu_matrix(t).apply(v);
  return lhs[0] == rhs[0] && lhs[1] == rhs[1] && lhs[2] == rhs[2];
}

}  // namespace charvar
