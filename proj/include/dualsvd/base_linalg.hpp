#pragma once

#include <cstdint>
#include <utility>

#include "dualsvd/dual_matrix.hpp"

namespace dualsvd {

/// Compact SVD M = U diag(sigma) V* keeping the singular values above the
/// numerical-rank cutoff.
struct CompactSVDResult {
  ComplexMatrix U;    // m x r, orthonormal columns
  RealVector sigma;   // length r, positive, non-increasing
  ComplexMatrix V;    // n x r, orthonormal columns
  Index rank = 0;
};

/// Compact SVD with relative rank cutoff: r = #{ sigma_j > rank_tol * sigma_max }.
/// rank_tol < 0 selects the default max(m,n) * machine epsilon. An all-zero
/// input yields a rank-0 result with empty factors.
CompactSVDResult svd_compact(const ComplexMatrix& m, double rank_tol = -1.0);

/// Thin QR of an m x n matrix with m >= n. R has a real non-negative diagonal
/// (unit-modulus phases are absorbed into the columns of Q); a rank-deficient
/// input yields zero diagonal entries in R.
std::pair<ComplexMatrix, ComplexMatrix> qr_thin(const ComplexMatrix& m);

/// For Q with r orthonormal columns, returns W of shape m x (m-r) such that
/// [Q W] is unitary. Checks the orthonormality precondition to 1e-10.
ComplexMatrix unitary_complement(const ComplexMatrix& q);

/// Deterministic m x n matrix with i.i.d. entries (g1 + i g2)/sqrt(2),
/// g1, g2 standard normal. Entries are generated column-major from a
/// Box-Muller transform over a seeded mt19937_64, so a fixed seed yields an
/// identical matrix on every call.
ComplexMatrix randn_complex(Index rows, Index cols, std::uint64_t seed);

/// Unnormalized 2-D DFT: entry (j,k) = sum_{a,b} X(a,b) exp(-2 pi i (aj/m + bk/n)).
ComplexMatrix dft2(const RealMatrix& x);

/// Deterministically derives an independent seed for a numbered stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace dualsvd
