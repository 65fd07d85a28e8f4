#include "dualsvd/randomized.hpp"

#include <Eigen/QR>
#include <limits>
#include <string>

namespace dualsvd {

namespace {

void validate(const DualMatrix& a, const RandomizedParams& params) {
  if (params.r < 2) throw InvalidParams("randomized: target rank r must be >= 2");
  if (params.p < 2) throw InvalidParams("randomized: oversampling p must be >= 2");
  if (params.q < 0) throw InvalidParams("randomized: power exponent q must be >= 0");
  const Index min_dim = std::min(a.rows(), a.cols());
  if (params.r + params.p > min_dim)
    throw InvalidParams("randomized: r + p = " + std::to_string(params.r + params.p) +
                        " exceeds min(m,n) = " + std::to_string(min_dim));
  if (a.standard.isZero(0.0))
    throw ZeroStandardPart("randomized: standard part is exactly zero");
}

// Dual orthonormal basis for the range of a sketch. A column-pivoted QR of
// the standard part determines the numerical column rank k; when k is below
// the sketch width, only the k pivot columns enter the dual QR. The margin
// factor keeps the retained directions well above the compact-SVD rank cutoff
// used downstream.
constexpr double kNarrowMargin = 1e3;

DualMatrix dual_orthonormal_basis(const DualMatrix& y) {
  const Index rows = y.rows(), cols = y.cols();
  Eigen::ColPivHouseholderQR<ComplexMatrix> cpqr(y.standard);
  const RealVector diag = cpqr.matrixR().diagonal().cwiseAbs();
  const double dmax = diag.size() > 0 ? diag(0) : 0.0;
  const double tol = kNarrowMargin * static_cast<double>(std::max(rows, cols)) *
                     std::numeric_limits<double>::epsilon() * dmax;
  Index k = 0;
  while (k < diag.size() && diag(k) > tol) ++k;
  if (k == 0)
    throw RankDeficientStandardPart("randomized: sketch standard part collapsed to rank 0");
  if (k == cols) return dual_qr_thin(y).Q;
  const auto& perm = cpqr.colsPermutation().indices();
  DualMatrix sub(ComplexMatrix(rows, k), ComplexMatrix(rows, k));
  for (Index j = 0; j < k; ++j) {
    sub.standard.col(j) = y.standard.col(perm(j));
    sub.infinitesimal.col(j) = y.infinitesimal.col(perm(j));
  }
  return dual_qr_thin(sub).Q;
}

}  // namespace

DualMatrix sketch(const DualMatrix& a, const RandomizedParams& params) {
  validate(a, params);
  const Index width = params.r + params.p;
  const ComplexMatrix omega_s = randn_complex(a.cols(), width, params.seed);
  if (params.omega_kind == OmegaKind::Complex) return mul(a, omega_s);
  const ComplexMatrix omega_i = randn_complex(a.cols(), width, derive_seed(params.seed, 1));
  return mul(a, DualMatrix(omega_s, omega_i));
}

RccdsvdInternals rccdsvd_diagnostic(const DualMatrix& a, const RandomizedParams& params) {
  DualMatrix y = sketch(a, params);
  const DualMatrix a_adj = adjoint(a);
  for (int j = 0; j < params.q; ++j) {
    const DualMatrix y_tilde = mul(a_adj, y);
    const DualMatrix q_tilde = dual_orthonormal_basis(y_tilde);
    y = mul(a, q_tilde);
  }
  RccdsvdInternals out;
  out.Q = dual_orthonormal_basis(y);
  out.B = mul(adjoint(out.Q), a);
  out.inner = ccdsvd(out.B);
  out.factors = {mul(out.Q, out.inner.U), out.inner.sigma, out.inner.V};
  return out;
}

CCDSVDFactors rccdsvd(const DualMatrix& a, const RandomizedParams& params) {
  return truncate_factors(rccdsvd_diagnostic(a, params).factors, params.r);
}

}  // namespace dualsvd
