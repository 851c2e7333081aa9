// qcorr command-line front end.
//
// Subcommands: measures, evolve, trajectory, isosurface, contour, freeze,
// verify-hierarchy. JSON output uses fixed key order and 17-significant-digit
// doubles so identical invocations produce byte-identical files.
//
// Exit codes: 0 success, 2 input validation error, 3 physicality error,
// 4 verification failure (hierarchy violations found).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/format.hpp"
#include "qcorr/geometry.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/state_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPhysicality = 3;
constexpr int kExitVerification = 4;

using namespace qcorr;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw StateJsonError("cannot open state file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

StateSpec load_state(const std::string& path) { return parse_state_json(read_file(path)); }

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw StateJsonError("cannot open output file: " + path);
  return f;
}

std::string json_matrix(const Eigen::Matrix4cd& m) {
  std::string out = "[";
  for (int r = 0; r < 4; ++r) {
    out += r ? ",[" : "[";
    for (int c = 0; c < 4; ++c) {
      if (c) out += ",";
      out += "[" + sig17(m(r, c).real()) + "," + sig17(m(r, c).imag()) + "]";
    }
    out += "]";
  }
  return out + "]";
}

std::string json_vec3(const Eigen::Vector3d& v) {
  return "[" + sig17(v[0]) + "," + sig17(v[1]) + "," + sig17(v[2]) + "]";
}

std::string json_mat3(const Eigen::Matrix3d& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) out += std::string(r ? "," : "") + json_vec3(m.row(r));
  return out + "]";
}

BellDiag require_bell_diag(const StateSpec& spec, const std::string& subcommand) {
  if (const auto* bd = std::get_if<BellDiag>(&spec)) return *bd;
  throw StateJsonError(subcommand + " requires a bell_diag state");
}

void run_measures(const std::string& state_path) {
  const StateSpec spec = load_state(state_path);
  const TwoQubitDensity rho = to_density(spec);
  double d = 0.0, dg = 0.0, c = 0.0, j = 0.0;
  const double mi = mutual_information(rho);
  if (const auto* bd = std::get_if<BellDiag>(&spec)) {
    d = quantum_discord_belldiag(*bd);
    dg = geometric_discord_belldiag(*bd);
    c = concurrence_xstate(*bd).C;
    j = classical_correlation_belldiag(*bd);
  } else {
    j = classical_correlation_bruteforce(rho).value;
    d = clamp_measure(mi - j, "quantum discord");
    dg = geometric_discord_general(rho).value;
    c = concurrence(rho);
  }
  std::cout << "{\"D\":" << sig17(d) << ",\"D_G\":" << sig17(dg) << ",\"C\":" << sig17(c)
            << ",\"I\":" << sig17(mi) << ",\"J\":" << sig17(j) << "}\n";
}

void run_evolve(const std::string& state_path, const std::string& channel_name, double p,
                bool gamma_time) {
  Channel ch;
  ch.kind = channel_kind_from_string(channel_name);
  ch.p = gamma_time ? 1.0 - std::exp(-p) : p;
  if (!(ch.p >= 0.0 && ch.p <= 1.0))
    throw StateJsonError("channel parameter p must lie in [0, 1]");
  const TwoQubitDensity evolved = apply_channel(to_density(load_state(state_path)), ch);
  const BlochForm b = density_to_bloch(evolved);
  std::cout << "{\"channel\":\"" << to_string(ch.kind) << "\",\"p\":" << sig17(ch.p)
            << ",\"matrix\":" << json_matrix(evolved.matrix()) << ",\"bloch\":{\"x\":"
            << json_vec3(b.x) << ",\"y\":" << json_vec3(b.y) << ",\"T\":" << json_mat3(b.T)
            << "},\"D_G\":" << sig17(geometric_discord_general(evolved).value) << "}\n";
}

void run_trajectory(const std::string& state_path, int steps, const std::string& out_path) {
  const BellDiag bd = require_bell_diag(load_state(state_path), "trajectory");
  const Trajectory t = phase_flip_trajectory(bd, steps);
  std::ofstream f = open_output(out_path);
  write_trajectory_csv(t, f);
  std::cout << "{\"samples\":" << t.samples.size() << ",\"out\":\"" << out_path << "\"}\n";
}

void run_freeze(const std::string& state_path) {
  const BellDiag bd = require_bell_diag(load_state(state_path), "freeze");
  const auto interval = freezing_interval(bd);
  const auto change = sudden_change_point(bd);
  std::cout << "{\"freezing\":";
  if (interval) {
    std::cout << "{\"p_lo\":" << sig17(interval->p_lo) << ",\"p_hi\":" << sig17(interval->p_hi)
              << ",\"value\":" << sig17(interval->value) << ",\"axes_swapped\":"
              << (interval->axes_swapped ? "true" : "false") << "}";
  } else {
    std::cout << "null";
  }
  std::cout << ",\"sudden_change_point\":" << (change ? sig17(*change) : "null");
  std::cout << ",\"separability\":";
  if (interval) {
    const SeparabilityProof proof = frozen_initial_is_separable(bd);
    std::cout << "{\"lambda1\":" << sig17(proof.lambda1) << ",\"lambda2\":" << sig17(proof.lambda2)
              << ",\"concurrence\":" << sig17(proof.concurrence)
              << ",\"min_pt_eigenvalue\":" << sig17(proof.min_pt_eigenvalue)
              << ",\"separable\":" << (proof.separable ? "true" : "false") << "}";
  } else {
    std::cout << "null";
  }
  std::cout << "}\n";
}

void run_isosurface(const std::string& field_name, double level, int resolution, bool clip,
                    double r, double s, const std::string& out_path) {
  ScalarField3 field;
  RegionMask mask;
  if (field_name == "dg") {
    field = field_dg_belldiag();
    if (clip) mask = clip_tetrahedron();
  } else if (field_name == "d") {
    field = field_d_belldiag();
    if (clip) mask = clip_tetrahedron();
  } else if (field_name == "dg-deformed") {
    field = field_dg_deformed(r, s);
    if (clip) mask = clip_deformed(r, s);
  } else {
    throw StateJsonError("unknown field: " + field_name + " (expected dg | d | dg-deformed)");
  }
  const IsoMesh mesh = iso_surface(field, level, resolution, mask);
  std::ofstream f = open_output(out_path);
  write_obj(mesh, f);
  std::cout << "{\"vertices\":" << mesh.vertices.size() << ",\"triangles\":"
            << mesh.triangles.size() << ",\"components\":" << connected_components(mesh)
            << ",\"out\":\"" << out_path << "\"}\n";
}

void run_contour(const std::string& field_name, double level, double plane_c3, int resolution,
                 bool clip, const std::string& out_path) {
  ScalarField3 field;
  if (field_name == "dg") {
    field = field_dg_belldiag();
  } else if (field_name == "d") {
    field = field_d_belldiag();
  } else {
    throw StateJsonError("unknown field: " + field_name + " (expected dg | d)");
  }
  const ContourSet contours =
      contour_slice(field, level, plane_c3, resolution, clip ? clip_tetrahedron() : RegionMask{});
  std::ofstream f = open_output(out_path);
  write_contour_csv(contours, f);
  std::cout << "{\"polylines\":" << contours.polylines.size() << ",\"points\":"
            << contours.total_points() << ",\"out\":\"" << out_path << "\"}\n";
}

int run_verify_hierarchy(uint64_t seed, int n_belldiag, int n_general, int grid_theta,
                         int grid_phi) {
  MeasurementGrid grid;
  grid.n_theta = grid_theta;
  grid.n_phi = grid_phi;
  const SampleReport report = verify_hierarchy(seed, n_belldiag, n_general, grid);
  std::cout << "{\"seed\":" << report.seed << ",\"n_belldiag\":" << n_belldiag
            << ",\"n_general\":" << n_general << ",\"n_samples\":" << report.n_samples
            << ",\"n_violations\":" << report.n_violations << ",\"worst_margin\":"
            << sig17(report.worst_margin) << "}\n";
  return report.n_violations > 0 ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit quantum correlation toolkit"};
  app.require_subcommand(1);

  std::string state_path, channel_name, out_path;
  std::string field_name = "dg";
  double p = 0.0, level = 0.0, plane_c3 = 0.0, def_r = 0.0, def_s = 0.0;
  bool gamma_time = false, clip = false;
  int steps = 400, resolution = 101, contour_res = 257;
  uint64_t seed = 1;
  int n_belldiag = 100000, n_general = 1000, grid_theta = 128, grid_phi = 256;

  CLI::App* measures_cmd = app.add_subcommand("measures", "Correlation measures of a state");
  measures_cmd->add_option("state", state_path, "state JSON file")->required();

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "Apply a decoherence channel");
  evolve_cmd->add_option("state", state_path, "state JSON file")->required();
  evolve_cmd->add_option("--channel", channel_name, "channel kind")->required();
  evolve_cmd->add_option("--p", p, "channel parameter (or Gamma*t with --gamma-time)")->required();
  evolve_cmd->add_flag("--gamma-time", gamma_time, "interpret --p as Gamma*t, p = 1 - exp(-Gamma*t)");

  CLI::App* trajectory_cmd = app.add_subcommand("trajectory", "Phase-flip trajectory CSV");
  trajectory_cmd->add_option("state", state_path, "state JSON file (bell_diag)")->required();
  trajectory_cmd->add_option("--steps", steps, "number of samples")->required();
  trajectory_cmd->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* freeze_cmd = app.add_subcommand("freeze", "Freezing analysis of a Bell-diagonal state");
  freeze_cmd->add_option("state", state_path, "state JSON file (bell_diag)")->required();

  CLI::App* iso_cmd = app.add_subcommand("isosurface", "Constant-discord level surface as OBJ");
  iso_cmd->add_option("--field", field_name, "dg | d | dg-deformed")->required();
  iso_cmd->add_option("--level", level, "iso level")->required();
  iso_cmd->add_option("--res", resolution, "grid resolution (odd, >= 33)");
  iso_cmd->add_flag("--clip", clip, "mask cells outside the physical region");
  iso_cmd->add_option("--r", def_r, "deformation r (dg-deformed)");
  iso_cmd->add_option("--s", def_s, "deformation s (dg-deformed)");
  iso_cmd->add_option("--out", out_path, "output OBJ path")->required();

  CLI::App* contour_cmd = app.add_subcommand("contour", "Level contour on a c3 plane as CSV");
  contour_cmd->add_option("--field", field_name, "dg | d");
  contour_cmd->add_option("--level", level, "contour level")->required();
  contour_cmd->add_option("--plane-c3", plane_c3, "plane c3")->required();
  contour_cmd->add_option("--res", contour_res, "grid resolution (odd, >= 33)");
  contour_cmd->add_flag("--clip", clip, "mask cells outside the physical tetrahedron");
  contour_cmd->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify-hierarchy", "Monte-Carlo check of 2 D_G >= D^2");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--n-belldiag", n_belldiag, "Bell-diagonal sample count");
  verify_cmd->add_option("--n-general", n_general, "general-state sample count");
  verify_cmd->add_option("--grid-theta", grid_theta, "measurement grid theta resolution");
  verify_cmd->add_option("--grid-phi", grid_phi, "measurement grid phi resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (measures_cmd->parsed()) {
      run_measures(state_path);
    } else if (evolve_cmd->parsed()) {
      run_evolve(state_path, channel_name, p, gamma_time);
    } else if (trajectory_cmd->parsed()) {
      run_trajectory(state_path, steps, out_path);
    } else if (freeze_cmd->parsed()) {
      run_freeze(state_path);
    } else if (iso_cmd->parsed()) {
      run_isosurface(field_name, level, resolution, clip, def_r, def_s, out_path);
    } else if (contour_cmd->parsed()) {
      run_contour(field_name, level, plane_c3, contour_res, clip, out_path);
    } else if (verify_cmd->parsed()) {
      return run_verify_hierarchy(seed, n_belldiag, n_general, grid_theta, grid_phi);
    }
  } catch (const PhysicalityError& e) {
    std::cerr << "physicality error: " << e.what() << "\n";
    return kExitPhysicality;
  } catch (const StateJsonError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
