#include "dualsvd/base_linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace dualsvd {

CompactSVDResult svd_compact(const ComplexMatrix& m, double rank_tol) {
  if (rank_tol < 0.0)
    rank_tol = static_cast<double>(std::max(m.rows(), m.cols())) *
               std::numeric_limits<double>::epsilon();
  Eigen::BDCSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Index r = 0;
  while (r < sv.size() && sv(r) > rank_tol * smax && sv(r) > 0.0) ++r;
  CompactSVDResult out;
  out.U = svd.matrixU().leftCols(r);
  out.sigma = sv.head(r);
  out.V = svd.matrixV().leftCols(r);
  out.rank = r;
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> qr_thin(const ComplexMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  if (rows < cols)
    throw InvalidParams("qr_thin: requires rows >= cols, got " + std::to_string(rows) + "x" +
                        std::to_string(cols));
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  // absorb diagonal phases into Q so R has a real non-negative diagonal
  for (Index k = 0; k < cols; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) {
      const Complex phase = d / a;
      q.col(k) *= phase;
      r.row(k) *= std::conj(phase);
      r(k, k) = Complex(a, 0.0);
    }
  }
  return {std::move(q), std::move(r)};
}

ComplexMatrix unitary_complement(const ComplexMatrix& q) {
  const Index rows = q.rows(), r = q.cols();
  if (r > rows)
    throw InvalidParams("unitary_complement: more columns than rows");
  const double ortho = (q.adjoint() * q - ComplexMatrix::Identity(r, r)).norm();
  if (ortho > 1e-10 * std::max(1.0, std::sqrt(static_cast<double>(r))))
    throw InvalidParams("unitary_complement: input columns not orthonormal (residual " +
                        std::to_string(ortho) + ")");
  if (r == rows) return ComplexMatrix(rows, 0);
  Eigen::HouseholderQR<ComplexMatrix> qr(q);
  ComplexMatrix full = qr.householderQ() * ComplexMatrix::Identity(rows, rows);
  return full.rightCols(rows - r);
}

namespace {

// uniform in (0, 1], stable across standard library implementations
inline double uniform01(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

inline Complex gauss_pair(std::mt19937_64& gen) {
  const double u1 = uniform01(gen);
  const double u2 = uniform01(gen);
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

}  // namespace

ComplexMatrix randn_complex(Index rows, Index cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1)
    throw InvalidParams("randn_complex: dimensions must be >= 1");
  std::mt19937_64 gen(seed);
  ComplexMatrix out(rows, cols);
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) out(i, j) = gauss_pair(gen) * inv_sqrt2;
  return out;
}

ComplexMatrix dft2(const RealMatrix& x) {
  const Index rows = x.rows(), cols = x.cols();
  auto dft_matrix = [](Index n) {
    ComplexMatrix f(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < n; ++a) {
        const double ang = -2.0 * std::numbers::pi * static_cast<double>(j) *
                           static_cast<double>(a) / static_cast<double>(n);
        f(j, a) = Complex(std::cos(ang), std::sin(ang));
      }
    return f;
  };
  return dft_matrix(rows) * x.cast<Complex>() * dft_matrix(cols);
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace dualsvd
