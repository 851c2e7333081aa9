#pragma once

// Phase-flip decoherence dynamics of Bell-diagonal states: trajectories
// c1(p) = (1-p)^2 c1(0), c2(p) = (1-p)^2 c2(0), c3 constant; the piecewise
// geometric-discord law with its sudden-change breakpoint; freezing-interval
// detection; and the frozen-initial-state separability certificate.

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <vector>

#include "qcorr/qstate.hpp"

namespace qcorr {

struct TrajectorySample {
  double p = 0.0;
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  double D_G = 0.0;
  double D = 0.0;
  double C = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

// Sample the phase-flip orbit of c0 on a uniform grid of `steps` points over
// [0, 1 - 1e-9]. p = 1 itself is excluded (q = 0 degenerates the flip map
// and the Gamma-time reparameterization diverges there).
Trajectory phase_flip_trajectory(const BellDiag& c0, int steps);

// CSV with header p,c1,c2,c3,D_G,D,C; 17 significant digits per value.
void write_trajectory_csv(const Trajectory& t, std::ostream& os);

enum class DgBranch { early, late };

struct PiecewiseDg {
  double value = 0.0;
  DgBranch branch = DgBranch::early;
};

// Piecewise law under phase flip, assuming the stated ordering
// |c1(0)| >= |c2(0)|, |c1(0)| >= |c3(0)| and |c1(0)| > 0:
//   p <= 1 - sqrt(|c3|/|c1|):  (c2(p)^2 + c3^2)/4      ["early"]
//   p >  1 - sqrt(|c3|/|c1|):  (c1(p)^2 + c2(p)^2)/4   ["late"]
// Throws std::invalid_argument if the ordering precondition fails; callers
// may relabel axes first.
PiecewiseDg piecewise_dg(const BellDiag& c0, double p);

// Breakpoint p* = 1 - sqrt(|c3|/|c1|) after relabeling the first two axes
// so |c1| is the larger. Returns nullopt when |c3| >= |c1| (no crossing) or
// c3 = 0 (decay to zero without a branch switch).
std::optional<double> sudden_change_point(const BellDiag& c0);

struct FreezingInterval {
  double p_lo = 0.0;
  double p_hi = 0.0;
  double value = 0.0;        // frozen D_G = c3^2/4
  bool axes_swapped = false;  // whether axes 1 and 2 were relabeled
};

// Nonempty exactly when (after relabeling the first two axes by magnitude)
// c2(0) = 0 and |c1(0)| > |c3(0)| > 0. Axis ties |c1| = |c3| report none.
std::optional<FreezingInterval> freezing_interval(const BellDiag& c0);

struct SeparabilityProof {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double concurrence = 0.0;
  double min_pt_eigenvalue = 0.0;
  bool separable = false;
};

// For a state satisfying the freezing condition, certify separability via
// the concurrence pieces and positivity of the partial transpose. Throws
// std::invalid_argument if c0 does not freeze.
SeparabilityProof frozen_initial_is_separable(const BellDiag& c0);

// Locate a kink (discontinuity of the decay rate) of uniformly sampled f(p)
// by three-point slope differencing: the change of central slope across a
// window of 3 samples must exceed 10x the median change elsewhere. Returns
// the p of the largest qualifying jump.
std::optional<double> detect_slope_kink(const std::vector<double>& p,
                                        const std::vector<double>& f);

}  // namespace qcorr
