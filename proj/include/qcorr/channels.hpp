#pragma once

// One-qubit Kraus operators for six decoherence channels, applied
// independently to both qubits (E_ij = E_i (x) E_j), plus the closed-form
// parameter maps and geometric-discord expressions for Bell-diagonal input.
// Throughout, q = 1 - p.

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "qcorr/qstate.hpp"

namespace qcorr {

enum class ChannelKind {
  amplitude_damping,
  phase_damping,
  depolarizing,
  bit_flip,
  phase_flip,
  bit_phase_flip,
};

struct Channel {
  ChannelKind kind = ChannelKind::phase_flip;
  double p = 0.0;
};

ChannelKind channel_kind_from_string(const std::string& name);
std::string to_string(ChannelKind kind);

// One-qubit Kraus operator list; operators that vanish identically (e.g.
// the sqrt(p) terms at p = 0) are omitted. Completeness sum E^dag E = I
// holds for every p in [0, 1].
std::vector<Eigen::Matrix2cd> kraus_operators(const Channel& ch);

// sum_ij (E_i (x) E_j) rho (E_i (x) E_j)^dag
TwoQubitDensity apply_channel(const TwoQubitDensity& rho, const Channel& ch);

// Bloch data of the evolved state for Bell-diagonal input. The correlation
// tensor stays diagonal under all six channels.
struct ChannelOutputParams {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Vector3d Tdiag = Eigen::Vector3d::Zero();
};

ChannelOutputParams evolve_params(const BellDiag& bd, const Channel& ch);

// Per-channel closed form for the geometric discord of the evolved state.
double geometric_discord_after(const BellDiag& bd, const Channel& ch);

}  // namespace qcorr
