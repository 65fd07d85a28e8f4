#include "dualsvd/dual_matrix.hpp"

#include <cmath>
#include <string>

namespace dualsvd {

namespace {

std::string shape_str(Index r, Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const DualMatrix& a, const DualMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch(std::string(op) + ": shapes " + shape_str(a.rows(), a.cols()) +
                        " and " + shape_str(b.rows(), b.cols()) + " differ");
}

}  // namespace

DualMatrix operator+(const DualMatrix& a, const DualMatrix& b) {
  require_same_shape(a, b, "dual add");
  return DualMatrix(a.standard + b.standard, a.infinitesimal + b.infinitesimal);
}

DualMatrix operator-(const DualMatrix& a, const DualMatrix& b) {
  require_same_shape(a, b, "dual sub");
  return DualMatrix(a.standard - b.standard, a.infinitesimal - b.infinitesimal);
}

DualMatrix mul(const DualMatrix& a, const DualMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("dual mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                        std::to_string(b.rows()) + " differ");
  // both products are evaluated as standalone kernels before the sum; an
  // accumulating product can round differently from a fresh one, which would
  // break the exact agreement of mul(a, (M, 0)) with mul(a, M)
  const ComplexMatrix lhs_term = a.standard * b.infinitesimal;
  const ComplexMatrix rhs_term = a.infinitesimal * b.standard;
  return DualMatrix(a.standard * b.standard, lhs_term + rhs_term);
}

DualMatrix mul(const DualMatrix& a, const ComplexMatrix& m) {
  if (a.cols() != m.rows())
    throw ShapeMismatch("dual mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                        std::to_string(m.rows()) + " differ");
  return DualMatrix(a.standard * m, a.infinitesimal * m);
}

DualMatrix adjoint(const DualMatrix& a) {
  return DualMatrix(a.standard.adjoint(), a.infinitesimal.adjoint());
}

double real_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw ShapeMismatch("real_inner: shapes " + shape_str(x.rows(), x.cols()) + " and " +
                        shape_str(y.rows(), y.cols()) + " differ");
  return (x.conjugate().cwiseProduct(y)).sum().real();
}

DualNumber frobenius_norm(const DualMatrix& a) {
  if (a.standard.isZero(0.0)) return {0.0, a.infinitesimal.norm()};
  const double ns = a.standard.norm();
  return {ns, real_inner(a.standard, a.infinitesimal) / ns};
}

DualNumber quasi_metric(const DualMatrix& a, const DualMatrix& b) {
  require_same_shape(a, b, "quasi_metric");
  const ComplexMatrix ds = a.standard - b.standard;
  const ComplexMatrix di = a.infinitesimal - b.infinitesimal;
  if (ds.isZero(0.0)) return {0.0, di.norm()};
  const double nds = ds.norm();
  const double ndi = di.norm();
  return {nds, ndi * ndi / (2.0 * nds)};
}

}  // namespace dualsvd
