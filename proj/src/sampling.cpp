#include "qcorr/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcorr {

double Rng::normal() {
  double u = 0.0;
  do {
    u = uniform();
  } while (u <= 0.0);
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

BellDiag BellDiagSampler::next() {
  while (true) {
    ++draws_;
    const BellDiag bd(rng_.uniform(-1.0, 1.0), rng_.uniform(-1.0, 1.0), rng_.uniform(-1.0, 1.0));
    if (is_physical(bd)) {
      ++accepted_;
      return bd;
    }
  }
}

TwoQubitDensity GeneralDensitySampler::next() {
  Eigen::Matrix4cd g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = complexd(rng_.normal(), rng_.normal());
  Eigen::Matrix4cd h = g * g.adjoint();
  h = 0.5 * (h + h.adjoint().eval());
  return TwoQubitDensity(h / h.trace().real());
}

DeformedBellDiag DeformedSampler::next() {
  while (true) {
    const DeformedBellDiag d(
        rng_.uniform(-1.0, 1.0), rng_.uniform(-1.0, 1.0),
        Eigen::Vector3d(rng_.uniform(-1.0, 1.0), rng_.uniform(-1.0, 1.0), rng_.uniform(-1.0, 1.0)));
    if (is_physical(d)) return d;
  }
}

std::vector<BellDiag> sample_bell_diag(uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  BellDiagSampler sampler(seed);
  std::vector<BellDiag> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(sampler.next());
  return out;
}

std::vector<TwoQubitDensity> sample_general_density(uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  GeneralDensitySampler sampler(seed);
  std::vector<TwoQubitDensity> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(sampler.next());
  return out;
}

SampleReport verify_hierarchy(uint64_t seed, int n_belldiag, int n_general,
                              const MeasurementGrid& grid) {
  if (n_belldiag < 0 || n_general < 0 || n_belldiag + n_general == 0)
    throw std::invalid_argument("hierarchy verification needs a positive sample count");
  SampleReport report;
  report.seed = seed;
  report.worst_margin = std::numeric_limits<double>::infinity();

  BellDiagSampler bell(seed);
  for (int i = 0; i < n_belldiag; ++i) {
    const BellDiag bd = bell.next();
    const double d = quantum_discord_belldiag(bd);
    const double dg = geometric_discord_general(bell_diag_to_density(bd)).value;
    const double margin = 2.0 * dg - d * d;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -1e-9) ++report.n_violations;
  }

  GeneralDensitySampler general(seed + 1);
  for (int i = 0; i < n_general; ++i) {
    const TwoQubitDensity rho = general.next();
    const double dg = geometric_discord_general(rho).value;
    const double d = quantum_discord_oracle(TwoQubitDensity(swap_qubits(rho.matrix())), grid);
    const double margin = 2.0 * dg - d * d;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -1e-5) ++report.n_violations;
  }

  report.n_samples = n_belldiag + n_general;
  return report;
}

}  // namespace qcorr
