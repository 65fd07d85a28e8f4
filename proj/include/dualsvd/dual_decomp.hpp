#pragma once

#include <optional>

#include "dualsvd/base_linalg.hpp"
#include "dualsvd/dual_matrix.hpp"

namespace dualsvd {

/// Factors of a concise compact dual SVD A = U Sigma V* with a real positive
/// diagonal Sigma, stored as a vector. Both factors have orthonormal
/// standard-part columns; the left factor additionally satisfies the dual
/// condition U_s* U_i + U_i* U_s = 0. The analogous condition on V holds
/// exactly when the real diagonal of U_s* A_i V_s vanishes: that component
/// of A_i is not representable with a real middle factor, and the
/// construction assigns it to V_i so the reconstruction stays exact (the
/// residual V_s* V_i + V_i* V_s then equals G* Sigma^-1 + Sigma^-1 G plus
/// the P-dependent commutator, with G = U_s* A_i V_s). The assignment is
/// orientation-independent: the left factor is always the exactly
/// dual-unitary one.
struct CCDSVDFactors {
  DualMatrix U;      // m x r
  RealVector sigma;  // length r, positive, non-increasing
  DualMatrix V;      // n x r
};

/// Reconstructs the dual matrix U diag(sigma) V* from the factors.
DualMatrix reconstruct(const CCDSVDFactors& f);

/// Keeps the leading r columns of U, V and the leading r singular values.
CCDSVDFactors truncate_factors(const CCDSVDFactors& f, Index r);

/// ||(I - U_s U_s*) A_i (I - V_s V_s*)||_F for orthonormal-column U_s, V_s.
/// Zero exactly when the decomposition existence condition holds.
double existence_defect(const DualMatrix& a, const ComplexMatrix& u_s, const ComplexMatrix& v_s);

struct CcdsvdOptions {
  /// Relative rank cutoff for the compact SVD of the standard part;
  /// negative selects the default max(m,n) * machine epsilon.
  double rank_tol = -1.0;
  /// Existence check threshold, relative to ||A_i||_F.
  double exist_tol = 1e-8;
  /// Free skew-Hermitian parameter of the dual parts (r x r). Defaults to
  /// zero, which minimizes ||U_i||_F and keeps results reproducible.
  std::optional<ComplexMatrix> skew_param;
};

/// Concise compact dual SVD. Decomposes the standard part, verifies the
/// existence condition against exist_tol * ||A_i||_F, and assembles the dual
/// parts of the factors:
///   U_i = (I - U_s U_s*) A_i V_s Sigma^-1 + U_s P
///   V_i = A_i* U_s Sigma^-1 - V_s Sigma P* Sigma^-1
/// The construction applies to both orientations; nothing in it requires
/// rows >= cols. When the standard part has repeated singular values the
/// kernel's singular vector basis is used as-is; if that basis does not
/// admit the decomposition the existence check reports it. Throws
/// ExistenceViolated, NotSkewHermitian or ZeroStandardPart.
CCDSVDFactors ccdsvd(const DualMatrix& a, const CcdsvdOptions& opts = {});

struct DualQRResult {
  DualMatrix Q;  // m x n, dual-unitary columns
  DualMatrix R;  // n x n, both parts upper triangular
};

/// Thin dual QR of an m x n dual matrix with m >= n whose standard part has
/// full column rank. Built on the standard-part QR: with M = Q_s* A_i R_s^-1
/// split into a skew-Hermitian S and an upper-triangular T (real diagonal),
///   R_i = T R_s,   Q_i = (I - Q_s Q_s*) A_i R_s^-1 + Q_s S,
/// which gives Q_i R_s + Q_s R_i = A_i and Q_s* Q_i + Q_i* Q_s = 0. Throws
/// RankDeficientStandardPart when a diagonal entry of R_s falls below the
/// rank tolerance.
DualQRResult dual_qr_thin(const DualMatrix& a);

}  // namespace dualsvd
