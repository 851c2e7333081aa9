#pragma once

// Two-qubit state representations and the conversions between them.
//
// Conventions used throughout the library:
//   * Pauli basis: sigma_1 = [[0,1],[1,0]], sigma_2 = [[0,-i],[i,0]],
//     sigma_3 = [[1,0],[0,-1]].
//   * Tensor ordering: qubit A is the left Kronecker factor, so the
//     computational basis is |00>, |01>, |10>, |11> with the first label
//     belonging to A. This ordering reproduces the explicit Bell-diagonal
//     matrix form used by all closed-form expressions in this library.
//   * Bell basis: |beta_ab> = (|0,b> + (-1)^a |1, 1 xor b>)/sqrt(2).

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace qcorr {

using complexd = std::complex<double>;

// Tolerances shared by the state validators.
inline constexpr double kEqualityTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

// Raised when a parameterization or matrix fails a positivity / trace /
// hermiticity requirement. The message names the violated condition.
class PhysicalityError : public std::runtime_error {
 public:
  explicit PhysicalityError(const std::string& what) : std::runtime_error(what) {}
};

// The three Pauli matrices, index 0..2 for sigma_1..sigma_3.
const std::array<Eigen::Matrix2cd, 3>& pauli();

// Kronecker product a (x) b with a acting on qubit A.
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

// Dense 4x4 density matrix. Construction validates hermiticity (1e-12),
// unit trace (1e-12) and positivity (smallest eigenvalue >= -1e-10); the
// looser PSD tolerance admits boundary states produced by arithmetic.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(const Eigen::Matrix4cd& m);
  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  Eigen::Matrix4cd m_;
};

// Bloch decomposition: local vectors x (qubit A), y (qubit B) and the 3x3
// correlation tensor T.
struct BlochForm {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
};

// Bell-diagonal state, fully specified by the correlation triple
// (c1, c2, c3). Physical iff all four Bell eigenvalues are nonnegative,
// i.e. the triple lies inside the state tetrahedron.
struct BellDiag {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();

  BellDiag() = default;
  explicit BellDiag(const Eigen::Vector3d& c_) : c(c_) {}
  BellDiag(double c1, double c2, double c3) : c(c1, c2, c3) {}

  // lambda_ab = (1 + (-1)^a c1 - (-1)^(a+b) c2 + (-1)^b c3) / 4
  double lambda(int a, int b) const;
  // Order (00, 01, 10, 11).
  Eigen::Vector4d eigenvalues() const;
  // max{|c1|, |c2|, |c3|}
  double c_max() const;
};

// Bell-diagonal state deformed by parallel local Bloch z-components r
// (qubit A) and s (qubit B). Physical iff min(mu_minus, nu_minus) >= 0.
struct DeformedBellDiag {
  double r = 0.0;
  double s = 0.0;
  Eigen::Vector3d c = Eigen::Vector3d::Zero();

  DeformedBellDiag() = default;
  DeformedBellDiag(double r_, double s_, const Eigen::Vector3d& c_) : r(r_), s(s_), c(c_) {}
};

// Closed-form eigenvalues (mu+, mu-, nu+, nu-) of the deformed state:
//   mu+-  = [(1 - c3) +- sqrt((r - s)^2 + (c1 + c2)^2)] / 4
//   nu+-  = [(1 + c3) +- sqrt((r + s)^2 + (c1 - c2)^2)] / 4
Eigen::Vector4d deformed_eigenvalues(const DeformedBellDiag& d);

bool is_physical(const BellDiag& bd, double tol = kPsdTol);
bool is_physical(const DeformedBellDiag& d, double tol = kPsdTol);

// Throw PhysicalityError naming the violated inequality.
void require_physical(const BellDiag& bd, double tol = kPsdTol);
void require_physical(const DeformedBellDiag& d, double tol = kPsdTol);

// rho = (1/4)(I + sum_i c_i sigma_i (x) sigma_i); exact matrix assembly.
TwoQubitDensity bell_diag_to_density(const BellDiag& bd);

// rho = (1/4)(I + r sigma_3 (x) I + s I (x) sigma_3 + sum_i c_i sigma_i (x) sigma_i)
TwoQubitDensity deformed_to_density(const DeformedBellDiag& d);

// x_i = tr(rho sigma_i (x) I), y_i = tr(rho I (x) sigma_i),
// T_ij = tr(rho sigma_i (x) sigma_j)
BlochForm density_to_bloch(const TwoQubitDensity& rho);

// Inverse of density_to_bloch; validates the reconstructed matrix.
TwoQubitDensity bloch_to_density(const BlochForm& b);

// Partial traces over one subsystem.
Eigen::Matrix2cd partial_trace_b(const Eigen::Matrix4cd& m);
Eigen::Matrix2cd partial_trace_a(const Eigen::Matrix4cd& m);

// Transpose with respect to subsystem B. The result is Hermitian but may
// be non-PSD, so it is returned as a raw matrix.
Eigen::Matrix4cd partial_transpose_b(const Eigen::Matrix4cd& m);

// Exchange the two qubits: x <-> y, T <-> T^t in the Bloch picture.
Eigen::Matrix4cd swap_qubits(const Eigen::Matrix4cd& m);

// Smallest eigenvalue of a Hermitian 4x4 matrix.
double min_eigenvalue(const Eigen::Matrix4cd& m);

}  // namespace qcorr
