#include "qcorr/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcorr/sym3eig.hpp"

namespace qcorr {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Entropy in bits of a 2x2 Hermitian density matrix via its closed-form
// eigenvalues.
double qubit_entropy(const Eigen::Matrix2cd& m) {
  const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double rad = std::hypot(0.5 * (m(0, 0).real() - m(1, 1).real()), std::abs(m(0, 1)));
  return -xlog2x(mean + rad) - xlog2x(mean - rad);
}

double bloch_entropy(double radius) {
  const double r = std::min(radius, 1.0);
  return binary_entropy(0.5 * (1.0 + r));
}

struct GoldenResult {
  double arg = 0.0;
  double value = 0.0;
};

// Golden-section maximization of f over [lo, hi].
template <typename F>
GoldenResult golden_max(const F& f, double lo, double hi, int steps) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < steps; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

Eigen::Vector3d unit_from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return Eigen::Vector3d(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

}  // namespace

double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

double von_neumann_entropy(const TwoQubitDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s -= xlog2x(es.eigenvalues()[i]);
  return s;
}

double mutual_information(const TwoQubitDensity& rho) {
  return qubit_entropy(partial_trace_b(rho.matrix())) +
         qubit_entropy(partial_trace_a(rho.matrix())) - von_neumann_entropy(rho);
}

double classical_correlation_belldiag(const BellDiag& bd) {
  require_physical(bd);
  return 1.0 - binary_entropy(0.5 * (1.0 + bd.c_max()));
}

double quantum_discord_belldiag(const BellDiag& bd) {
  require_physical(bd);
  const double c1 = bd.c[0], c2 = bd.c[1], c3 = bd.c[2];
  const double i_part = 0.25 * (xlog2x(1.0 - c1 - c2 - c3) + xlog2x(1.0 - c1 + c2 + c3) +
                                xlog2x(1.0 + c1 - c2 + c3) + xlog2x(1.0 + c1 + c2 - c3));
  const double c = bd.c_max();
  const double j_part = 0.5 * (xlog2x(1.0 + c) + xlog2x(1.0 - c));
  return clamp_measure(i_part - j_part, "quantum_discord_belldiag");
}

Eigen::Matrix2cd measurement_projector(const Eigen::Vector3d& n, int outcome) {
  if (std::abs(n.norm() - 1.0) > kEqualityTol)
    throw std::invalid_argument("measurement direction must be a unit vector");
  if (outcome != 1 && outcome != -1)
    throw std::invalid_argument("measurement outcome must be +1 or -1");
  Eigen::Matrix2cd p = Eigen::Matrix2cd::Identity();
  for (int i = 0; i < 3; ++i) p += static_cast<double>(outcome) * n[i] * pauli()[i];
  return 0.5 * p;
}

std::array<ConditionedOutcome, 2> condition_on_b(const TwoQubitDensity& rho,
                                                 const Eigen::Vector3d& n) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  std::array<ConditionedOutcome, 2> out;
  int k = 0;
  for (int sign : {+1, -1}) {
    const Eigen::Matrix4cd proj = kron2(id, measurement_projector(n, sign));
    const Eigen::Matrix4cd unnorm = proj * rho.matrix() * proj;
    const double p = unnorm.trace().real();
    out[k].probability = p;
    if (p > 1e-15) out[k].state = unnorm / p;
    ++k;
  }
  return out;
}

double measurement_objective(const BlochForm& b, const Eigen::Vector3d& n) {
  // Conditioning on outcome +-: p = (1 +- y.n)/2 and the surviving qubit A
  // carries Bloch vector (x +- T n)/(1 +- y.n). The 4x4 conditioned state is
  // that qubit tensored with a pure projector, so its entropy is the qubit
  // entropy.
  const Eigen::Vector3d tn = b.T * n;
  const double yn = b.y.dot(n);
  double cond = 0.0;
  for (int sign : {+1, -1}) {
    const double w = 1.0 + sign * yn;
    const double p = 0.5 * w;
    if (p <= 1e-15) continue;
    cond += p * bloch_entropy((b.x + sign * tn).norm() / w);
  }
  return bloch_entropy(b.x.norm()) - cond;
}

ClassicalCorrelation classical_correlation_bruteforce(const TwoQubitDensity& rho,
                                                      const MeasurementGrid& grid) {
  if (grid.n_theta < 64 || grid.n_phi < 128)
    throw std::invalid_argument("measurement grid must be at least 64x128");
  const BlochForm b = density_to_bloch(rho);
  const auto objective = [&b](double theta, double phi) {
    return measurement_objective(b, unit_from_angles(theta, phi));
  };

  const double dtheta = M_PI / grid.n_theta;
  const double dphi = 2.0 * M_PI / grid.n_phi;
  double best = -1.0, best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i < grid.n_theta; ++i) {
    const double theta = (i + 0.5) * dtheta;
    for (int j = 0; j < grid.n_phi; ++j) {
      const double phi = j * dphi;
      const double v = objective(theta, phi);
      if (v > best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  for (int round = 0; round < grid.refine_rounds; ++round) {
    const GoldenResult rt = golden_max(
        [&](double t) { return objective(t, best_phi); },
        best_theta - dtheta, best_theta + dtheta, grid.refine_steps);
    if (rt.value > best) {
      best = rt.value;
      best_theta = rt.arg;
    }
    const GoldenResult rp = golden_max(
        [&](double t) { return objective(best_theta, t); },
        best_phi - dphi, best_phi + dphi, grid.refine_steps);
    if (rp.value > best) {
      best = rp.value;
      best_phi = rp.arg;
    }
  }

  return ClassicalCorrelation{best, unit_from_angles(best_theta, best_phi)};
}

double quantum_discord_oracle(const TwoQubitDensity& rho, const MeasurementGrid& grid) {
  const double d = mutual_information(rho) - classical_correlation_bruteforce(rho, grid).value;
  return clamp_measure(d, "quantum_discord_oracle");
}

GeometricDiscord geometric_discord_general(const TwoQubitDensity& rho) {
  const BlochForm b = density_to_bloch(rho);
  GeometricDiscord out;
  out.kernel.K = b.x * b.x.transpose() + b.T * b.T.transpose();
  out.kernel.k_max = sym3_eigenvalues(out.kernel.K)[2];
  const double total = b.x.squaredNorm() + b.T.squaredNorm();
  out.value = clamp_measure(0.25 * (total - out.kernel.k_max), "geometric_discord_general");
  return out;
}

double geometric_discord_belldiag(const BellDiag& bd) {
  require_physical(bd);
  const Eigen::Vector3d c2 = bd.c.cwiseAbs2();
  return clamp_measure(0.25 * (c2.sum() - c2.maxCoeff()), "geometric_discord_belldiag");
}

double geometric_discord_deformed(const DeformedBellDiag& d) {
  require_physical(d);
  const Eigen::Vector3d c2 = d.c.cwiseAbs2();
  const double r2 = d.r * d.r;
  const double k_max = std::max({c2[0], c2[1], c2[2] + r2});
  return clamp_measure(0.25 * (c2.sum() + r2 - k_max), "geometric_discord_deformed");
}

ConcurrencePieces concurrence_xstate(const BellDiag& bd) {
  require_physical(bd);
  ConcurrencePieces p;
  p.lambda1 = std::abs(0.25 * (bd.c[0] - bd.c[1])) - std::abs(0.25 * (1.0 - bd.c[2]));
  p.lambda2 = std::abs(0.25 * (bd.c[0] + bd.c[1])) - std::abs(0.25 * (1.0 + bd.c[2]));
  p.C = 2.0 * std::max({0.0, p.lambda1, p.lambda2});
  return p;
}

double concurrence(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd yy = kron2(pauli()[1], pauli()[1]);
  const Eigen::Matrix4cd flipped = yy * rho.matrix().conjugate() * yy;
  const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho.matrix() * flipped, false);
  Eigen::Vector4d lam;
  for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
  std::sort(lam.data(), lam.data() + 4, std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

NearestClassical nearest_classical_distance(const BellDiag& bd) {
  const Eigen::Matrix4cd rho = bell_diag_to_density(bd).matrix();
  NearestClassical best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 3; ++axis) {
    const Eigen::Matrix4cd sigma_ii = kron2(pauli()[axis], pauli()[axis]);
    const auto dist = [&](double t) {
      const Eigen::Matrix4cd chi = 0.25 * (Eigen::Matrix4cd::Identity() + t * sigma_ii);
      return (rho - chi).squaredNorm();
    };
    const GoldenResult r = golden_max([&](double t) { return -dist(t); }, -1.0, 1.0, 80);
    const double d = -r.value;
    if (d < best.distance - kEqualityTol) {
      best.distance = d;
      best.axis = axis + 1;
      best.t = r.arg;
    }
  }
  return best;
}

double clamp_measure(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -1e-12) return 0.0;
  throw std::logic_error(std::string("internal consistency: ") + what + " = " +
                         std::to_string(value) + " is negative beyond tolerance");
}

}  // namespace qcorr
