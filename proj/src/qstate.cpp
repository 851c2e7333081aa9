#include "qcorr/qstate.hpp"

#include <cmath>
#include <cstdio>

namespace qcorr {

namespace {

std::string fmt_violation(const char* expr, double value) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s = %.17g < 0", expr, value);
  return std::string(buf);
}

}  // namespace

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    std::array<Eigen::Matrix2cd, 3> s;
    const complexd i(0.0, 1.0);
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -i, i, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

TwoQubitDensity::TwoQubitDensity(const Eigen::Matrix4cd& m) : m_(m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kEqualityTol)
    throw PhysicalityError("density matrix is not Hermitian (max |m - m^dag| = " +
                           std::to_string(herm) + ")");
  const double tr_err = std::abs(m.trace() - complexd(1.0, 0.0));
  if (tr_err > kEqualityTol)
    throw PhysicalityError("density matrix trace differs from 1 by " + std::to_string(tr_err));
  const double min_eig = min_eigenvalue(m);
  if (min_eig < -kPsdTol)
    throw PhysicalityError(fmt_violation("density matrix smallest eigenvalue", min_eig));
}

double BellDiag::lambda(int a, int b) const {
  const double sa = (a % 2 == 0) ? 1.0 : -1.0;
  const double sb = (b % 2 == 0) ? 1.0 : -1.0;
  return 0.25 * (1.0 + sa * c[0] - sa * sb * c[1] + sb * c[2]);
}

Eigen::Vector4d BellDiag::eigenvalues() const {
  return Eigen::Vector4d(lambda(0, 0), lambda(0, 1), lambda(1, 0), lambda(1, 1));
}

double BellDiag::c_max() const { return c.cwiseAbs().maxCoeff(); }

Eigen::Vector4d deformed_eigenvalues(const DeformedBellDiag& d) {
  const double c1 = d.c[0], c2 = d.c[1], c3 = d.c[2];
  const double mu_rad = std::hypot(d.r - d.s, c1 + c2);
  const double nu_rad = std::hypot(d.r + d.s, c1 - c2);
  return Eigen::Vector4d(0.25 * ((1.0 - c3) + mu_rad), 0.25 * ((1.0 - c3) - mu_rad),
                         0.25 * ((1.0 + c3) + nu_rad), 0.25 * ((1.0 + c3) - nu_rad));
}

bool is_physical(const BellDiag& bd, double tol) {
  return bd.eigenvalues().minCoeff() >= -tol;
}

bool is_physical(const DeformedBellDiag& d, double tol) {
  const Eigen::Vector4d e = deformed_eigenvalues(d);
  return std::min(e[1], e[3]) >= -tol;
}

void require_physical(const BellDiag& bd, double tol) {
  const double c1 = bd.c[0], c2 = bd.c[1], c3 = bd.c[2];
  struct Ineq {
    const char* expr;
    double value;
  };
  // 4*lambda_ab in the order (10, 00, 01, 11).
  const Ineq ineqs[4] = {
      {"1 - c1 + c2 + c3", 1.0 - c1 + c2 + c3},
      {"1 + c1 - c2 + c3", 1.0 + c1 - c2 + c3},
      {"1 + c1 + c2 - c3", 1.0 + c1 + c2 - c3},
      {"1 - c1 - c2 - c3", 1.0 - c1 - c2 - c3},
  };
  for (const auto& q : ineqs)
    if (q.value < -4.0 * tol)
      throw PhysicalityError("non-physical Bell-diagonal state: " + fmt_violation(q.expr, q.value));
}

void require_physical(const DeformedBellDiag& d, double tol) {
  const Eigen::Vector4d e = deformed_eigenvalues(d);
  if (e[1] < -tol)
    throw PhysicalityError("non-physical deformed state: " + fmt_violation("mu_minus", e[1]));
  if (e[3] < -tol)
    throw PhysicalityError("non-physical deformed state: " + fmt_violation("nu_minus", e[3]));
}

TwoQubitDensity bell_diag_to_density(const BellDiag& bd) {
  require_physical(bd);
  return deformed_to_density(DeformedBellDiag(0.0, 0.0, bd.c));
}

TwoQubitDensity deformed_to_density(const DeformedBellDiag& d) {
  require_physical(d);
  const double c1 = d.c[0], c2 = d.c[1], c3 = d.c[2];
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 0.25 * (1.0 + d.r + d.s + c3);
  m(1, 1) = 0.25 * (1.0 + d.r - d.s - c3);
  m(2, 2) = 0.25 * (1.0 - d.r + d.s - c3);
  m(3, 3) = 0.25 * (1.0 - d.r - d.s + c3);
  m(0, 3) = m(3, 0) = 0.25 * (c1 - c2);
  m(1, 2) = m(2, 1) = 0.25 * (c1 + c2);
  return TwoQubitDensity(m);
}

BlochForm density_to_bloch(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd& m = rho.matrix();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.x[i] = (m * kron2(pauli()[i], id)).trace().real();
    b.y[i] = (m * kron2(id, pauli()[i])).trace().real();
    for (int j = 0; j < 3; ++j) b.T(i, j) = (m * kron2(pauli()[i], pauli()[j])).trace().real();
  }
  return b;
}

TwoQubitDensity bloch_to_density(const BlochForm& b) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  for (int i = 0; i < 3; ++i) {
    m += b.x[i] * kron2(pauli()[i], id);
    m += b.y[i] * kron2(id, pauli()[i]);
    for (int j = 0; j < 3; ++j) m += b.T(i, j) * kron2(pauli()[i], pauli()[j]);
  }
  return TwoQubitDensity(0.25 * m);
}

Eigen::Matrix2cd partial_trace_b(const Eigen::Matrix4cd& m) {
  Eigen::Matrix2cd a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return a;
}

Eigen::Matrix2cd partial_trace_a(const Eigen::Matrix4cd& m) {
  Eigen::Matrix2cd b;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) b(k, l) = m(k, l) + m(2 + k, 2 + l);
  return b;
}

Eigen::Matrix4cd partial_transpose_b(const Eigen::Matrix4cd& m) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = m.block<2, 2>(2 * i, 2 * j).transpose();
  return out;
}

Eigen::Matrix4cd swap_qubits(const Eigen::Matrix4cd& m) {
  const auto idx = [](int a, int b) { return 2 * a + b; };
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(idx(a, b), idx(c, d)) = m(idx(b, a), idx(d, c));
  return out;
}

double min_eigenvalue(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace qcorr
