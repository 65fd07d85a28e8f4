#pragma once

#include <stdexcept>
#include <string>

namespace dualsvd {

/// Operand shapes do not conform.
struct ShapeMismatch : std::invalid_argument {
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A configuration or algorithm parameter is out of its valid range.
struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// The standard part is exactly zero where an inverse of its singular values
/// is required.
struct ZeroStandardPart : std::runtime_error {
  explicit ZeroStandardPart(const std::string& what) : std::runtime_error(what) {}
};

/// The infinitesimal part is exactly zero where a relative error against it
/// is requested.
struct ZeroInfinitesimalPart : std::runtime_error {
  explicit ZeroInfinitesimalPart(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied free parameter fails the skew-Hermitian check P* = -P.
struct NotSkewHermitian : std::invalid_argument {
  explicit NotSkewHermitian(const std::string& what) : std::invalid_argument(what) {}
};

/// The decomposition existence condition fails; carries the measured defect
/// and the threshold it was compared against.
struct ExistenceViolated : std::runtime_error {
  ExistenceViolated(double defect_, double threshold_)
      : std::runtime_error("ccdsvd: existence condition violated (defect " +
                           std::to_string(defect_) + " > threshold " +
                           std::to_string(threshold_) + ")"),
        defect(defect_),
        threshold(threshold_) {}
  double defect;
  double threshold;
};

/// The standard part of a QR input is numerically rank deficient.
struct RankDeficientStandardPart : std::runtime_error {
  explicit RankDeficientStandardPart(const std::string& what) : std::runtime_error(what) {}
};

/// File reading or writing failed.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dualsvd
