#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "dualsvd/dual_number.hpp"
#include "dualsvd/errors.hpp"

namespace dualsvd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dual complex matrix A = A_s + A_i * eps, stored as two dense column-major
/// complex buffers of identical shape.
class DualMatrix {
 public:
  DualMatrix() = default;
  DualMatrix(ComplexMatrix standard_part, ComplexMatrix infinitesimal_part)
      : standard(std::move(standard_part)), infinitesimal(std::move(infinitesimal_part)) {
    if (standard.rows() != infinitesimal.rows() || standard.cols() != infinitesimal.cols())
      throw ShapeMismatch("DualMatrix: standard and infinitesimal parts must have equal shape");
  }

  static DualMatrix Zero(Index rows, Index cols) {
    return DualMatrix(ComplexMatrix::Zero(rows, cols), ComplexMatrix::Zero(rows, cols));
  }
  /// Embeds a complex matrix as a dual matrix with zero infinitesimal part.
  static DualMatrix FromStandard(ComplexMatrix standard_part) {
    ComplexMatrix zero = ComplexMatrix::Zero(standard_part.rows(), standard_part.cols());
    return DualMatrix(std::move(standard_part), std::move(zero));
  }

  Index rows() const { return standard.rows(); }
  Index cols() const { return standard.cols(); }

  ComplexMatrix standard;
  ComplexMatrix infinitesimal;
};

DualMatrix operator+(const DualMatrix& a, const DualMatrix& b);
DualMatrix operator-(const DualMatrix& a, const DualMatrix& b);

/// Dual product: (A_s B_s, A_s B_i + A_i B_s); the eps^2 term is discarded.
DualMatrix mul(const DualMatrix& a, const DualMatrix& b);
/// Product with a plain complex matrix: (A_s M, A_i M).
DualMatrix mul(const DualMatrix& a, const ComplexMatrix& m);
inline DualMatrix operator*(const DualMatrix& a, const DualMatrix& b) { return mul(a, b); }
inline DualMatrix operator*(const DualMatrix& a, const ComplexMatrix& m) { return mul(a, m); }

/// Conjugate transpose of both parts: A* = A_s* + A_i* eps.
DualMatrix adjoint(const DualMatrix& a);

/// Real inner product <X,Y> = Re(trace(X* Y)).
double real_inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// Dual Frobenius norm. If A_s is not exactly zero the result is
/// (||A_s||_F, <A_s,A_i>/||A_s||_F), otherwise (0, ||A_i||_F). The branch
/// test is an exact all-zeros check on A_s.
DualNumber frobenius_norm(const DualMatrix& a);

/// Quasi-metric of two dual matrices. If A_s != B_s exactly the result is
/// (||A_s-B_s||_F, ||A_i-B_i||_F^2 / (2||A_s-B_s||_F)), otherwise
/// (0, ||A_i-B_i||_F).
DualNumber quasi_metric(const DualMatrix& a, const DualMatrix& b);

}  // namespace dualsvd
