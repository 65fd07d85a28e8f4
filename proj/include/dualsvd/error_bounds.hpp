#pragma once

#include "dualsvd/randomized.hpp"

namespace dualsvd {

/// Measured and predicted sides of the average Frobenius error bound.
struct BoundReport {
  double lhs_standard = 0.0;       // measured ||E_s||_F (dual-norm standard part)
  double lhs_eps = 0.0;            // measured eps coefficient of the dual norm
  double rhs_deterministic = 0.0;  // (1 + r/(p-1))^{1/2} (sum_{j>r} sigma_j^2)^{1/2}
  double rhs_eps_coeff = 0.0;      // coefficient of sqrt(eps); 0 when the inner product is negative
  bool satisfied_standard = false; // lhs_standard (or its Monte Carlo mean) <= rhs_deterministic
  bool eps_inner_negative = false; // <E_s, A_i> < 0, so the sqrt(eps) coefficient is undefined
};

/// Terms bounding the infinitesimal part of the quasi-metric error,
/// evaluated from a diagnostic randomized run.
struct QuasiMetricTerms {
  double term_b = 0.0;     // ||Uhat* B_i Vhat||_F, the projected-sketch term
  double term_q = 0.0;     // ||Q_i*||_F ||E_s||_F
  double term_qbar = 0.0;  // ||Qbar_i*||_F ||E_s||_F
};

/// ||A_s - U_s Sigma V_s*||_F / ||A_s||_F. Throws ZeroStandardPart.
double re_standard(const DualMatrix& a, const CCDSVDFactors& f);

/// ||A_i - U_i Sigma V_s* - U_s Sigma V_i*||_F / ||A_i||_F.
/// Throws ZeroInfinitesimalPart.
double re_infinitesimal(const DualMatrix& a, const CCDSVDFactors& f);

/// Evaluates the Frobenius-error bound terms for one set of factors. The
/// left-hand fields come from the dual Frobenius norm of A - U Sigma V*; the
/// deterministic right-hand side uses the singular values of A_s and the
/// given (r, p). Requires r >= 2, p >= 2 and r + p <= min(m, n).
BoundReport frobenius_error_bound(const DualMatrix& a, const CCDSVDFactors& f, int r, int p);

/// Monte Carlo version: averages the measured left-hand fields over fresh
/// untruncated randomized runs (q = 0) with per-trial seeds derived from the
/// base seed, and compares the mean against the deterministic bound.
BoundReport frobenius_error_bound_monte_carlo(const DualMatrix& a, int r, int p, int trials,
                                              std::uint64_t seed);

/// Evaluates the three quasi-metric bound terms from a diagnostic run.
/// Complements are built with unitary_complement; the under-determined
/// Qbar_i* is the minimum-Frobenius-norm solution of
/// Qbar_i* U_s + Qbar_s* U_i = 0, namely Qbar_i* = -Qbar_s* U_i U_s*.
QuasiMetricTerms quasi_metric_error_terms(const DualMatrix& a,
                                          const RccdsvdInternals& internals);

}  // namespace dualsvd
