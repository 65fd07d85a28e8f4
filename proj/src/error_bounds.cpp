#include "dualsvd/error_bounds.hpp"

#include <cmath>

namespace dualsvd {

double re_standard(const DualMatrix& a, const CCDSVDFactors& f) {
  if (a.standard.isZero(0.0))
    throw ZeroStandardPart("re_standard: standard part is exactly zero");
  const ComplexMatrix recon =
      f.U.standard * f.sigma.asDiagonal() * f.V.standard.adjoint();
  return (a.standard - recon).norm() / a.standard.norm();
}

double re_infinitesimal(const DualMatrix& a, const CCDSVDFactors& f) {
  if (a.infinitesimal.isZero(0.0))
    throw ZeroInfinitesimalPart("re_infinitesimal: infinitesimal part is exactly zero");
  const ComplexMatrix recon =
      f.U.infinitesimal * f.sigma.asDiagonal() * f.V.standard.adjoint() +
      f.U.standard * f.sigma.asDiagonal() * f.V.infinitesimal.adjoint();
  return (a.infinitesimal - recon).norm() / a.infinitesimal.norm();
}

namespace {

void check_bound_params(const DualMatrix& a, int r, int p) {
  if (r < 2 || p < 2)
    throw InvalidParams("frobenius_error_bound: requires r >= 2 and p >= 2");
  if (r + p > std::min(a.rows(), a.cols()))
    throw InvalidParams("frobenius_error_bound: r + p exceeds min(m, n)");
}

double deterministic_rhs(const DualMatrix& a, int r, int p) {
  // full spectrum of the standard part; rank_tol = 0 keeps every positive value
  const RealVector sigma = svd_compact(a.standard, 0.0).sigma;
  double tail_sq = 0.0;
  for (Index j = r; j < sigma.size(); ++j) tail_sq += sigma(j) * sigma(j);
  return std::sqrt(1.0 + static_cast<double>(r) / (p - 1)) * std::sqrt(tail_sq);
}

}  // namespace

BoundReport frobenius_error_bound(const DualMatrix& a, const CCDSVDFactors& f, int r, int p) {
  check_bound_params(a, r, p);
  BoundReport report;
  const DualMatrix resid = a - reconstruct(f);
  const DualNumber norm = frobenius_norm(resid);
  report.lhs_standard = norm.standard;
  report.lhs_eps = norm.infinitesimal;
  report.rhs_deterministic = deterministic_rhs(a, r, p);
  const double ip = real_inner(resid.standard, a.infinitesimal);
  report.eps_inner_negative = ip < 0.0;
  report.rhs_eps_coeff = ip >= 0.0 ? std::sqrt(2.0 * ip) : 0.0;
  report.satisfied_standard = report.lhs_standard <= report.rhs_deterministic;
  return report;
}

BoundReport frobenius_error_bound_monte_carlo(const DualMatrix& a, int r, int p, int trials,
                              std::uint64_t seed) {
  check_bound_params(a, r, p);
  if (trials < 1) throw InvalidParams("frobenius_error_bound_monte_carlo: trials must be >= 1");
  BoundReport report;
  double mean_ip = 0.0;
  for (int t = 0; t < trials; ++t) {
    RandomizedParams params{r, p, 0, OmegaKind::Complex, derive_seed(seed, t)};
    const CCDSVDFactors& f = rccdsvd_diagnostic(a, params).factors;
    const DualMatrix resid = a - reconstruct(f);
    const DualNumber norm = frobenius_norm(resid);
    report.lhs_standard += norm.standard;
    report.lhs_eps += norm.infinitesimal;
    mean_ip += real_inner(resid.standard, a.infinitesimal);
  }
  report.lhs_standard /= trials;
  report.lhs_eps /= trials;
  mean_ip /= trials;
  report.rhs_deterministic = deterministic_rhs(a, r, p);
  report.eps_inner_negative = mean_ip < 0.0;
  report.rhs_eps_coeff = mean_ip >= 0.0 ? std::sqrt(2.0 * mean_ip) : 0.0;
  report.satisfied_standard = report.lhs_standard <= report.rhs_deterministic;
  return report;
}

QuasiMetricTerms quasi_metric_error_terms(const DualMatrix& a, const RccdsvdInternals& d) {
  if (d.Q.rows() != a.rows() || d.B.cols() != a.cols() ||
      d.B.rows() != d.Q.cols() || d.inner.U.rows() != d.B.rows() ||
      d.inner.V.rows() != a.cols())
    throw ShapeMismatch("quasi_metric_error_terms: internals do not match the matrix");

  const CCDSVDFactors& f = d.factors;
  const ComplexMatrix e_s =
      a.standard - f.U.standard * f.sigma.asDiagonal() * f.V.standard.adjoint();
  const double e_s_norm = e_s.norm();

  QuasiMetricTerms terms;
  const ComplexMatrix u_hat = unitary_complement(d.inner.U.standard);
  const ComplexMatrix v_hat = unitary_complement(d.inner.V.standard);
  terms.term_b = (u_hat.adjoint() * d.B.infinitesimal * v_hat).norm();
  terms.term_q = d.Q.infinitesimal.norm() * e_s_norm;
  const ComplexMatrix q_bar = unitary_complement(d.Q.standard);
  const ComplexMatrix q_bar_i_adj =
      -(q_bar.adjoint() * f.U.infinitesimal) * f.U.standard.adjoint();
  terms.term_qbar = q_bar_i_adj.norm() * e_s_norm;
  return terms;
}

}  // namespace dualsvd
