#include "qcorr/sym3eig.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

Eigen::Vector3d sorted3(double a, double b, double c) {
  Eigen::Vector3d v(a, b, c);
  std::sort(v.data(), v.data() + 3);
  return v;
}

}  // namespace

Eigen::Vector3d sym3_eigenvalues(const Eigen::Matrix3d& a) {
  const double off2 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  if (off2 <= 1e-60 * scale * scale) return sorted3(a(0, 0), a(1, 1), a(2, 2));

  // Discriminant of the depressed characteristic cubic of A/scale.
  const Eigen::Matrix3d b = a / scale;
  const double tr = b.trace();
  const double m2 = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0) + b(0, 0) * b(2, 2) -
                    b(0, 2) * b(2, 0) + b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1);
  const double det = b.determinant();
  const double ca = -tr, cb = m2, cc = -det;
  const double dp = cb - ca * ca / 3.0;
  const double dq = 2.0 * ca * ca * ca / 27.0 - ca * cb / 3.0 + cc;
  const double disc = -4.0 * dp * dp * dp - 27.0 * dq * dq;
  if (disc < 1e-14) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

  const double q = a.trace() / 3.0;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * off2;
  const double p = std::sqrt(p2 / 6.0);
  const Eigen::Matrix3d bb = (a - q * Eigen::Matrix3d::Identity()) / p;
  const double r = std::clamp(bb.determinant() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e_hi = q + 2.0 * p * std::cos(phi);
  const double e_lo = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  return Eigen::Vector3d(e_lo, 3.0 * q - e_hi - e_lo, e_hi);
}

}  // namespace qcorr
