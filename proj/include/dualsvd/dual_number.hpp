#pragma once

namespace dualsvd {

/// A dual scalar a + b*eps with eps^2 = 0. The standard part a and the
/// infinitesimal part b are real.
struct DualNumber {
  double standard = 0.0;
  double infinitesimal = 0.0;

  friend DualNumber operator+(DualNumber x, DualNumber y) {
    return {x.standard + y.standard, x.infinitesimal + y.infinitesimal};
  }
  friend DualNumber operator-(DualNumber x, DualNumber y) {
    return {x.standard - y.standard, x.infinitesimal - y.infinitesimal};
  }
  // (a + b eps)(c + d eps) = ac + (ad + bc) eps; the eps^2 term is dropped.
  friend DualNumber operator*(DualNumber x, DualNumber y) {
    return {x.standard * y.standard,
            x.standard * y.infinitesimal + x.infinitesimal * y.standard};
  }
  friend DualNumber operator*(double a, DualNumber x) {
    return {a * x.standard, a * x.infinitesimal};
  }
  friend DualNumber operator*(DualNumber x, double a) { return a * x; }
  friend bool operator==(DualNumber x, DualNumber y) {
    return x.standard == y.standard && x.infinitesimal == y.infinitesimal;
  }
};

}  // namespace dualsvd
