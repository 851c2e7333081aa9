#include "qcorr/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "qcorr/measures.hpp"

namespace qcorr {

namespace {

void require_parameter(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("channel parameter p must lie in [0, 1]");
}

int flip_axis(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::bit_flip: return 0;
    case ChannelKind::bit_phase_flip: return 1;
    case ChannelKind::phase_flip: return 2;
    default: throw std::logic_error("not a flip channel");
  }
}

}  // namespace

ChannelKind channel_kind_from_string(const std::string& name) {
  if (name == "amplitude_damping") return ChannelKind::amplitude_damping;
  if (name == "phase_damping") return ChannelKind::phase_damping;
  if (name == "depolarizing") return ChannelKind::depolarizing;
  if (name == "bit_flip") return ChannelKind::bit_flip;
  if (name == "phase_flip") return ChannelKind::phase_flip;
  if (name == "bit_phase_flip") return ChannelKind::bit_phase_flip;
  throw std::invalid_argument("unknown channel kind: " + name);
}

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::amplitude_damping: return "amplitude_damping";
    case ChannelKind::phase_damping: return "phase_damping";
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::bit_flip: return "bit_flip";
    case ChannelKind::phase_flip: return "phase_flip";
    case ChannelKind::bit_phase_flip: return "bit_phase_flip";
  }
  throw std::logic_error("unreachable");
}

std::vector<Eigen::Matrix2cd> kraus_operators(const Channel& ch) {
  require_parameter(ch.p);
  const double p = ch.p, q = 1.0 - ch.p;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  std::vector<Eigen::Matrix2cd> ops;
  switch (ch.kind) {
    case ChannelKind::amplitude_damping: {
      Eigen::Matrix2cd e0 = Eigen::Matrix2cd::Zero();
      e0(0, 0) = 1.0;
      e0(1, 1) = std::sqrt(q);
      ops.push_back(e0);
      if (p > 0.0) {
        // sqrt(p) (sigma_1 + i sigma_2)/2 = sqrt(p) |0><1|
        Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
        e1(0, 1) = std::sqrt(p);
        ops.push_back(e1);
      }
      break;
    }
    case ChannelKind::phase_damping: {
      Eigen::Matrix2cd e0 = Eigen::Matrix2cd::Zero();
      e0(0, 0) = 1.0;
      e0(1, 1) = std::sqrt(q);
      ops.push_back(e0);
      if (p > 0.0) {
        Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
        e1(1, 1) = std::sqrt(p);
        ops.push_back(e1);
      }
      break;
    }
    case ChannelKind::depolarizing: {
      ops.push_back(std::sqrt(1.0 - 0.75 * p) * id);
      if (p > 0.0)
        for (int i = 0; i < 3; ++i) ops.push_back(std::sqrt(0.25 * p) * pauli()[i]);
      break;
    }
    case ChannelKind::bit_flip:
    case ChannelKind::bit_phase_flip:
    case ChannelKind::phase_flip: {
      ops.push_back(std::sqrt(1.0 - 0.5 * p) * id);
      if (p > 0.0) ops.push_back(std::sqrt(0.5 * p) * pauli()[flip_axis(ch.kind)]);
      break;
    }
  }
  return ops;
}

TwoQubitDensity apply_channel(const TwoQubitDensity& rho, const Channel& ch) {
  const std::vector<Eigen::Matrix2cd> ops = kraus_operators(ch);
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (const auto& ea : ops)
    for (const auto& eb : ops) {
      const Eigen::Matrix4cd e = kron2(ea, eb);
      out += e * rho.matrix() * e.adjoint();
    }
  return TwoQubitDensity(out);
}

ChannelOutputParams evolve_params(const BellDiag& bd, const Channel& ch) {
  require_parameter(ch.p);
  require_physical(bd);
  const double p = ch.p, q = 1.0 - ch.p;
  const double c1 = bd.c[0], c2 = bd.c[1], c3 = bd.c[2];
  ChannelOutputParams out;
  switch (ch.kind) {
    case ChannelKind::amplitude_damping:
      out.x = Eigen::Vector3d(0, 0, p);
      out.y = Eigen::Vector3d(0, 0, p);
      out.Tdiag = Eigen::Vector3d(q * c1, q * c2, p * p + q * q * c3);
      break;
    case ChannelKind::phase_damping:
      out.Tdiag = Eigen::Vector3d(q * c1, q * c2, c3);
      break;
    case ChannelKind::depolarizing:
      out.Tdiag = q * q * bd.c;
      break;
    case ChannelKind::bit_flip:
    case ChannelKind::bit_phase_flip:
    case ChannelKind::phase_flip: {
      const int i = flip_axis(ch.kind);
      out.Tdiag = q * q * bd.c;
      out.Tdiag[i] = bd.c[i];
      break;
    }
  }
  return out;
}

double geometric_discord_after(const BellDiag& bd, const Channel& ch) {
  require_parameter(ch.p);
  require_physical(bd);
  const double p = ch.p, q = 1.0 - ch.p;
  const double c1 = bd.c[0], c2 = bd.c[1], c3 = bd.c[2];
  double value = 0.0;
  switch (ch.kind) {
    case ChannelKind::amplitude_damping: {
      const double t3 = p * p + c3 * q * q;
      value = q * q * (c1 * c1 + c2 * c2) + t3 * t3 + p * p -
              std::max({q * q * c1 * c1, q * q * c2 * c2, t3 * t3 + p * p});
      break;
    }
    case ChannelKind::phase_damping:
      value = q * q * (c1 * c1 + c2 * c2) + c3 * c3 -
              std::max({q * q * c1 * c1, q * q * c2 * c2, c3 * c3});
      break;
    case ChannelKind::depolarizing: {
      const double q4 = q * q * q * q;
      value = q4 * (c1 * c1 + c2 * c2 + c3 * c3) -
              q4 * std::max({c1 * c1, c2 * c2, c3 * c3});
      break;
    }
    case ChannelKind::bit_flip:
    case ChannelKind::bit_phase_flip:
    case ChannelKind::phase_flip: {
      const int i = flip_axis(ch.kind);
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const double q4 = q * q * q * q;
      value = q4 * (bd.c[j] * bd.c[j] + bd.c[k] * bd.c[k]) + bd.c[i] * bd.c[i] -
              std::max({q4 * bd.c[j] * bd.c[j], q4 * bd.c[k] * bd.c[k], bd.c[i] * bd.c[i]});
      break;
    }
  }
  return clamp_measure(0.25 * value, "geometric_discord_after");
}

}  // namespace qcorr
