#include "qcorr/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qcorr/channels.hpp"
#include "qcorr/format.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

namespace {

constexpr double kPMax = 1.0 - 1e-9;

// Relabel so |c1| >= |c2|; c3 is pinned by the phase-flip channel.
BellDiag sort_first_two(const BellDiag& c0) {
  BellDiag out = c0;
  if (std::abs(out.c[1]) > std::abs(out.c[0])) std::swap(out.c[0], out.c[1]);
  return out;
}

}  // namespace

Trajectory phase_flip_trajectory(const BellDiag& c0, int steps) {
  require_physical(c0);
  if (steps < 2) throw std::invalid_argument("trajectory needs at least 2 steps");
  Trajectory t;
  t.samples.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double p = kPMax * i / (steps - 1);
    const double q2 = (1.0 - p) * (1.0 - p);
    TrajectorySample s;
    s.p = p;
    s.c = Eigen::Vector3d(q2 * c0.c[0], q2 * c0.c[1], c0.c[2]);
    const BellDiag bd(s.c);
    s.D_G = geometric_discord_belldiag(bd);
    s.D = quantum_discord_belldiag(bd);
    s.C = concurrence_xstate(bd).C;
    t.samples.push_back(s);
  }
  return t;
}

void write_trajectory_csv(const Trajectory& t, std::ostream& os) {
  os << "p,c1,c2,c3,D_G,D,C\n";
  for (const auto& s : t.samples)
    os << sig17(s.p) << ',' << sig17(s.c[0]) << ',' << sig17(s.c[1]) << ',' << sig17(s.c[2])
       << ',' << sig17(s.D_G) << ',' << sig17(s.D) << ',' << sig17(s.C) << '\n';
}

PiecewiseDg piecewise_dg(const BellDiag& c0, double p) {
  const double a1 = std::abs(c0.c[0]), a2 = std::abs(c0.c[1]), a3 = std::abs(c0.c[2]);
  if (a1 < a2 || a1 < a3 || a1 == 0.0)
    throw std::invalid_argument(
        "piecewise_dg requires |c1| >= |c2|, |c1| >= |c3| and |c1| > 0; relabel axes first");
  const double q2 = (1.0 - p) * (1.0 - p);
  const double c1p = q2 * c0.c[0], c2p = q2 * c0.c[1];
  const double brk = 1.0 - std::sqrt(a3 / a1);
  PiecewiseDg out;
  if (p <= brk) {
    out.branch = DgBranch::early;
    out.value = 0.25 * (c2p * c2p + c0.c[2] * c0.c[2]);
  } else {
    out.branch = DgBranch::late;
    out.value = 0.25 * (c1p * c1p + c2p * c2p);
  }
  return out;
}

std::optional<double> sudden_change_point(const BellDiag& c0) {
  const BellDiag s = sort_first_two(c0);
  const double a1 = std::abs(s.c[0]), a3 = std::abs(s.c[2]);
  if (a3 == 0.0 || a3 >= a1) return std::nullopt;
  return 1.0 - std::sqrt(a3 / a1);
}

std::optional<FreezingInterval> freezing_interval(const BellDiag& c0) {
  require_physical(c0);
  const BellDiag s = sort_first_two(c0);
  if (s.c[1] != 0.0) return std::nullopt;
  const double a1 = std::abs(s.c[0]), a3 = std::abs(s.c[2]);
  if (!(a1 > a3 && a3 > 0.0)) return std::nullopt;
  FreezingInterval f;
  f.p_lo = 0.0;
  f.p_hi = 1.0 - std::sqrt(a3 / a1);
  f.value = 0.25 * s.c[2] * s.c[2];
  f.axes_swapped = std::abs(c0.c[1]) > std::abs(c0.c[0]);
  return f;
}

SeparabilityProof frozen_initial_is_separable(const BellDiag& c0) {
  if (!freezing_interval(c0))
    throw std::invalid_argument("state does not satisfy the freezing condition");
  const ConcurrencePieces cp = concurrence_xstate(c0);
  SeparabilityProof proof;
  proof.lambda1 = cp.lambda1;
  proof.lambda2 = cp.lambda2;
  proof.concurrence = cp.C;
  proof.min_pt_eigenvalue = min_eigenvalue(partial_transpose_b(bell_diag_to_density(c0).matrix()));
  // Boundary states |c1| + |c3| = 1 have Lambda = 0 exactly; allow half-ulp
  // rounding of the 1/4-scale arithmetic when testing for zero concurrence.
  proof.separable = (cp.C <= 1e-14) && (proof.min_pt_eigenvalue >= -kPsdTol);
  return proof;
}

std::optional<double> detect_slope_kink(const std::vector<double>& p,
                                        const std::vector<double>& f) {
  const int n = static_cast<int>(p.size());
  if (n < 7 || f.size() != p.size())
    throw std::invalid_argument("kink detection needs >= 7 uniform samples");
  const double h = p[1] - p[0];
  std::vector<double> slope(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) slope[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  std::vector<double> jump;
  jump.reserve(n);
  for (int i = 2; i + 2 < n; ++i) jump.push_back(std::abs(slope[i + 1] - slope[i - 1]));
  std::vector<double> sorted = jump;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double median = sorted[sorted.size() / 2];
  int best = 0;
  for (int i = 1; i < static_cast<int>(jump.size()); ++i)
    if (jump[i] > jump[best]) best = i;
  if (jump[best] <= 10.0 * median || jump[best] <= 1e-9) return std::nullopt;
  return p[best + 2];
}

}  // namespace qcorr
