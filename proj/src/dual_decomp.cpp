#include "dualsvd/dual_decomp.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dualsvd {

DualMatrix reconstruct(const CCDSVDFactors& f) {
  const ComplexMatrix us = f.U.standard * f.sigma.asDiagonal();
  const ComplexMatrix ui = f.U.infinitesimal * f.sigma.asDiagonal();
  return DualMatrix(us * f.V.standard.adjoint(),
                    ui * f.V.standard.adjoint() + us * f.V.infinitesimal.adjoint());
}

CCDSVDFactors truncate_factors(const CCDSVDFactors& f, Index r) {
  const Index k = std::min<Index>(r, f.sigma.size());
  return {DualMatrix(f.U.standard.leftCols(k), f.U.infinitesimal.leftCols(k)),
          f.sigma.head(k),
          DualMatrix(f.V.standard.leftCols(k), f.V.infinitesimal.leftCols(k))};
}

double existence_defect(const DualMatrix& a, const ComplexMatrix& u_s, const ComplexMatrix& v_s) {
  if (u_s.rows() != a.rows() || v_s.rows() != a.cols())
    throw ShapeMismatch("existence_defect: factor shapes do not match the matrix");
  const ComplexMatrix& ai = a.infinitesimal;
  ComplexMatrix t = ai - u_s * (u_s.adjoint() * ai);
  t -= (t * v_s) * v_s.adjoint();
  return t.norm();
}

CCDSVDFactors ccdsvd(const DualMatrix& a, const CcdsvdOptions& opts) {
  const CompactSVDResult svd = svd_compact(a.standard, opts.rank_tol);
  if (svd.rank == 0)
    throw ZeroStandardPart("ccdsvd: standard part has numerical rank 0");
  const Index r = svd.rank;

  ComplexMatrix p = ComplexMatrix::Zero(r, r);
  if (opts.skew_param.has_value()) {
    p = *opts.skew_param;
    if (p.rows() != r || p.cols() != r)
      throw ShapeMismatch("ccdsvd: skew parameter must be " + std::to_string(r) + "x" +
                          std::to_string(r) + " (rank of the standard part)");
    const double dev = (p + p.adjoint()).norm();
    if (dev > 1e-12 * std::max(1.0, p.norm()))
      throw NotSkewHermitian("ccdsvd: ||P + P*|| = " + std::to_string(dev));
  }

  const ComplexMatrix& ai = a.infinitesimal;
  const double ai_norm = ai.norm();
  const double defect = existence_defect(a, svd.U, svd.V);
  const double threshold = opts.exist_tol * ai_norm;
  if (defect > threshold) throw ExistenceViolated(defect, threshold);

  const RealVector inv_sigma = svd.sigma.cwiseInverse();
  const ComplexMatrix ai_v = ai * svd.V;
  ComplexMatrix u_i = (ai_v - svd.U * (svd.U.adjoint() * ai_v)) * inv_sigma.asDiagonal();
  u_i += svd.U * p;
  ComplexMatrix v_i = (ai.adjoint() * svd.U) * inv_sigma.asDiagonal();
  v_i -= svd.V * (svd.sigma.asDiagonal() * p.adjoint() * inv_sigma.asDiagonal());

  return {DualMatrix(svd.U, std::move(u_i)), svd.sigma, DualMatrix(svd.V, std::move(v_i))};
}

DualQRResult dual_qr_thin(const DualMatrix& a) {
  const Index rows = a.rows(), cols = a.cols();
  if (rows < cols)
    throw InvalidParams("dual_qr_thin: requires rows >= cols");
  auto [q_s, r_s] = qr_thin(a.standard);

  double diag_max = 0.0;
  for (Index k = 0; k < cols; ++k) diag_max = std::max(diag_max, std::abs(r_s(k, k)));
  const double tol = static_cast<double>(std::max(rows, cols)) *
                     std::numeric_limits<double>::epsilon() * diag_max;
  for (Index k = 0; k < cols; ++k)
    if (std::abs(r_s(k, k)) <= tol)
      throw RankDeficientStandardPart("dual_qr_thin: R_s diagonal entry " + std::to_string(k) +
                                      " below tolerance; standard part rank deficient");

  // W = A_i R_s^-1 via a right triangular solve
  const ComplexMatrix w =
      r_s.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(a.infinitesimal);
  const ComplexMatrix m = q_s.adjoint() * w;

  // Split M = S + T with S skew-Hermitian and T upper triangular with real
  // diagonal. This is the unique split under the real-diagonal normalization
  // of R_s: the strict lower part of M determines S, the remainder is T.
  ComplexMatrix s = ComplexMatrix::Zero(cols, cols);
  for (Index j = 0; j < cols; ++j) {
    s(j, j) = Complex(0.0, m(j, j).imag());
    for (Index i = j + 1; i < cols; ++i) {
      s(i, j) = m(i, j);
      s(j, i) = -std::conj(m(i, j));
    }
  }
  const ComplexMatrix t = m - s;

  ComplexMatrix r_i = t * r_s;
  r_i.triangularView<Eigen::StrictlyLower>().setZero();
  ComplexMatrix q_i = w - q_s * t;

  return {DualMatrix(std::move(q_s), std::move(q_i)), DualMatrix(std::move(r_s), std::move(r_i))};
}

}  // namespace dualsvd
