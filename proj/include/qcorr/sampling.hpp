#pragma once

// Seeded random state generation and the Monte-Carlo verifier for the
// hierarchy 2 D_G >= D^2. Uniform doubles and normals are generated from
// mt19937_64 with explicit arithmetic (no std::*_distribution), so streams
// are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 gen_;
};

// Rejection sampling of Bell-diagonal states uniform over the physical
// tetrahedron; the acceptance ratio converges to its volume fraction 1/3.
class BellDiagSampler {
 public:
  explicit BellDiagSampler(uint64_t seed) : rng_(seed) {}
  BellDiag next();
  uint64_t draws() const { return draws_; }
  uint64_t accepted() const { return accepted_; }

 private:
  Rng rng_;
  uint64_t draws_ = 0;
  uint64_t accepted_ = 0;
};

// Ginibre states rho = G G^dag / tr(G G^dag) with i.i.d. standard complex
// normal entries of G.
class GeneralDensitySampler {
 public:
  explicit GeneralDensitySampler(uint64_t seed) : rng_(seed) {}
  TwoQubitDensity next();

 private:
  Rng rng_;
};

// Rejection sampling of physical deformed states uniform over the
// admissible (r, s, c) box.
class DeformedSampler {
 public:
  explicit DeformedSampler(uint64_t seed) : rng_(seed) {}
  DeformedBellDiag next();

 private:
  Rng rng_;
};

std::vector<BellDiag> sample_bell_diag(uint64_t seed, int n);
std::vector<TwoQubitDensity> sample_general_density(uint64_t seed, int n);

struct SampleReport {
  uint64_t seed = 0;
  long long n_samples = 0;
  long long n_violations = 0;
  double worst_margin = 0.0;  // min over samples of 2 D_G - D^2
};

// Check 2 D_G >= D^2 over n_belldiag closed-form samples (violation slack
// 1e-9) and n_general Ginibre samples with D from the measurement
// optimizer (slack 1e-5 for optimizer error). D_G always takes the
// matrix route. For the general samples the optimizer measures the same
// subsystem that the geometric discord is referenced to, via a qubit swap.
// Bell-diagonal samples draw from `seed`, general samples from `seed + 1`.
SampleReport verify_hierarchy(uint64_t seed, int n_belldiag, int n_general,
                              const MeasurementGrid& grid = {});

}  // namespace qcorr
