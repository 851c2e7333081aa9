#pragma once

// Correlation measures for two-qubit states: entropies, mutual information,
// classical correlation, quantum discord (closed form for Bell-diagonal
// states and a brute-force measurement optimizer for everything else),
// geometric discord, concurrence and the nearest-classical-state distance.
// All entropic quantities are in bits (base-2 logarithms, 0 log 0 = 0).

#include <Eigen/Dense>

#include <array>

#include "qcorr/qstate.hpp"

namespace qcorr {

// -x log2 x - (1-x) log2 (1-x)
double binary_entropy(double x);

double von_neumann_entropy(const TwoQubitDensity& rho);

// S(rho_A) + S(rho_B) - S(rho_AB) via partial traces.
double mutual_information(const TwoQubitDensity& rho);

// 1 - H2((1 + c)/2) with c = max{|c1|, |c2|, |c3|}.
double classical_correlation_belldiag(const BellDiag& bd);

// Closed form for Bell-diagonal states; equals mutual information minus
// classical correlation.
double quantum_discord_belldiag(const BellDiag& bd);

// Local projective measurement on one qubit along unit direction n:
// projectors (I +- n.sigma)/2.
Eigen::Matrix2cd measurement_projector(const Eigen::Vector3d& n, int outcome);

struct ConditionedOutcome {
  double probability = 0.0;
  Eigen::Matrix4cd state = Eigen::Matrix4cd::Zero();  // normalized when probability > 0
};

// Condition rho on the two outcomes of a projective measurement of qubit B
// along n. Outcome order (+, -).
std::array<ConditionedOutcome, 2> condition_on_b(const TwoQubitDensity& rho,
                                                 const Eigen::Vector3d& n);

// S(rho_A) - sum_k p_k S(rho_k) for a measurement of qubit B along n.
double measurement_objective(const BlochForm& b, const Eigen::Vector3d& n);

struct MeasurementGrid {
  int n_theta = 128;
  int n_phi = 256;
  int refine_steps = 40;   // golden-section steps per angle per round
  int refine_rounds = 2;   // alternating theta/phi coordinate-descent rounds
};

struct ClassicalCorrelation {
  double value = 0.0;
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
};

// Maximize the measurement objective over directions on qubit B by grid
// search plus golden-section refinement. Ties between grid maxima are
// broken by the smallest (theta, phi).
ClassicalCorrelation classical_correlation_bruteforce(const TwoQubitDensity& rho,
                                                      const MeasurementGrid& grid = {});

// mutual_information - classical_correlation_bruteforce.
double quantum_discord_oracle(const TwoQubitDensity& rho, const MeasurementGrid& grid = {});

struct GeometricKernel {
  Eigen::Matrix3d K = Eigen::Matrix3d::Zero();  // x x^t + T T^t
  double k_max = 0.0;
};

struct GeometricDiscord {
  double value = 0.0;
  GeometricKernel kernel;
};

// D_G = (|x|^2 + tr(T T^t) - k_max) / 4.
GeometricDiscord geometric_discord_general(const TwoQubitDensity& rho);

// (c1^2 + c2^2 + c3^2 - max{c1^2, c2^2, c3^2}) / 4
double geometric_discord_belldiag(const BellDiag& bd);

// (c1^2 + c2^2 + c3^2 + r^2 - max{c1^2, c2^2, c3^2 + r^2}) / 4; independent of s.
double geometric_discord_deformed(const DeformedBellDiag& d);

struct ConcurrencePieces {
  double lambda1 = 0.0;  // |(c1 - c2)/4| - |(1 - c3)/4|
  double lambda2 = 0.0;  // |(c1 + c2)/4| - |(1 + c3)/4|
  double C = 0.0;        // 2 max{0, lambda1, lambda2}
};

ConcurrencePieces concurrence_xstate(const BellDiag& bd);

// Wootters concurrence via the spin-flipped product rho rho~; works for any
// two-qubit state.
double concurrence(const TwoQubitDensity& rho);

struct NearestClassical {
  double distance = 0.0;  // squared Hilbert-Schmidt distance
  int axis = 1;           // 1-based; ties broken by smallest axis
  double t = 0.0;
};

// Minimize ||rho - chi||^2 over classical states chi = (I + t sigma_i (x)
// sigma_i)/4 by a 1-D golden-section search per axis. The minimum equals
// the Bell-diagonal geometric discord.
NearestClassical nearest_classical_distance(const BellDiag& bd);

// Clamp tiny negative measure values (>= -1e-12) to zero; larger negatives
// raise an internal-consistency error.
double clamp_measure(double value, const char* what);

}  // namespace qcorr
