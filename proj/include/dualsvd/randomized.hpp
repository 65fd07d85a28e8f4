#pragma once

#include <cstdint>

#include "dualsvd/dual_decomp.hpp"

namespace dualsvd {

/// Distribution of the random test matrix.
enum class OmegaKind {
  Complex,  // plain complex Gaussian, infinitesimal sketch is A_i * Omega
  Dual      // dual Gaussian with independent standard and infinitesimal draws
};

struct RandomizedParams {
  int r = 2;                              // target rank, >= 2
  int p = 2;                              // oversampling, >= 2
  int q = 0;                              // power scheme exponent, >= 0
  OmegaKind omega_kind = OmegaKind::Complex;
  std::uint64_t seed = 0;
};

/// Y0 = A * Omega with Omega of shape n x (r+p). For OmegaKind::Complex,
/// Omega = randn_complex(n, r+p, seed) and the infinitesimal part of the
/// sketch equals A_i * Omega exactly. For OmegaKind::Dual the infinitesimal
/// part of Omega is an independent draw seeded with derive_seed(seed, 1).
DualMatrix sketch(const DualMatrix& a, const RandomizedParams& params);

/// Intermediate state of a randomized run, exposed for bound evaluation.
struct RccdsvdInternals {
  DualMatrix Q;           // m x k dual-orthonormal range basis, k <= r+p
  DualMatrix B;           // k x n projected matrix Q* A
  CCDSVDFactors inner;    // CCDSVD of B, untruncated
  CCDSVDFactors factors;  // full-width final factors, U = Q * inner.U
};

/// Randomized CCDSVD with all intermediates, factors untruncated. The power
/// loop alternates Yt = A* Y and Y = A Qt with a dual QR re-orthonormalization
/// of each intermediate; the sketch basis is narrowed to the numerical column
/// rank of its standard part before each dual QR, so exactly low-rank inputs
/// with oversampling do not feed a rank-deficient triangular factor into the
/// dual construction.
RccdsvdInternals rccdsvd_diagnostic(const DualMatrix& a, const RandomizedParams& params);

/// Randomized CCDSVD truncated to the leading r columns and singular values.
CCDSVDFactors rccdsvd(const DualMatrix& a, const RandomizedParams& params);

}  // namespace dualsvd
