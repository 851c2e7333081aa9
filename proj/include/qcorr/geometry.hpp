#pragma once

// State-space geometry in correlation (c1, c2, c3) coordinates: the physical
// tetrahedron and separable octahedron, level-surface extraction of
// constant-discord sets as triangle meshes (marching cubes over [-1,1]^3),
// plane-slice contours (marching squares), connected-component analysis and
// the contour-containment check behind the 2 D_G >= D^2 hierarchy.
//
// Level surfaces and contours at level <= 0 are defined to be empty: the
// zero set of either discord is the measure-zero Cartesian-axis skeleton,
// which a marching extraction cannot represent.

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qcorr/qstate.hpp"

namespace qcorr {

bool in_tetrahedron(const Eigen::Vector3d& c, double tol = kEqualityTol);

// |c1| + |c2| + |c3| <= 1; coincides with PPT separability for physical c.
bool in_octahedron(const Eigen::Vector3d& c, double tol = kEqualityTol);

using ScalarField3 = std::function<double(const Eigen::Vector3d&)>;
using RegionMask = std::function<bool(const Eigen::Vector3d&)>;

// Bell-diagonal geometric discord as a field over the cube.
ScalarField3 field_dg_belldiag();

// Bell-diagonal quantum discord, extended continuously outside the physical
// tetrahedron by dropping u log2 u terms with u <= 0 (exact inside).
ScalarField3 field_d_belldiag();

// Deformed-family geometric discord (independent of s).
ScalarField3 field_dg_deformed(double r, double s);

RegionMask clip_tetrahedron();
RegionMask clip_deformed(double r, double s);

struct IsoMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> component_id;  // per triangle, dense labels in first-seen order

  bool empty() const { return triangles.empty(); }
};

// Marching cubes on a uniform resolution^3 grid over [-1,1]^3. resolution
// must be odd and >= 33 so the planes c_i = 0 are grid planes. With a clip
// mask, cells whose eight corners all fall outside the region are skipped,
// leaving the open cut ends where the surface meets the region boundary.
// Triangles are emitted in cell order, so output is deterministic.
IsoMesh iso_surface(const ScalarField3& field, double level, int resolution,
                    const RegionMask& clip = {});

// Zero set of min(mu_minus, nu_minus): the boundary of the deformed physical
// region. Requires |r| < 1 and |s| < 1. At r = s = 0 this is the tetrahedron
// surface.
IsoMesh deformation_boundary(double r, double s, int resolution);

// Number of triangle-adjacency components (triangles sharing a welded
// vertex).
int connected_components(const IsoMesh& mesh);

struct ContourSet {
  double plane_c3 = 0.0;
  std::vector<std::vector<Eigen::Vector2d>> polylines;  // (c1, c2) points

  int total_points() const;
};

// Marching squares of {(c1, c2): field(c1, c2, plane_c3) = level} over
// [-1,1]^2. Grid points whose value lands exactly on the level are snapped
// onto the contour, so degenerate straight-line pieces (field touching the
// level tangentially along a grid line) are emitted as polylines as well.
ContourSet contour_slice(const ScalarField3& field, double level, double plane_c3,
                         int resolution, const RegionMask& clip = {});

// Geometric certificate for 2 D_G >= D^2 on one plane: every point of the
// clipped 2 D_G = alpha^2 contour must satisfy D <= alpha + eps, and every
// point of the clipped D = alpha contour must satisfy sqrt(2 D_G) >= alpha
// - eps, with eps the marching-squares interpolation tolerance.
bool contour_containment(double alpha, double plane_c3, int resolution);

// Wavefront OBJ (v/f records, 9 significant digits, c-space coordinates).
void write_obj(const IsoMesh& mesh, std::ostream& os);

// CSV with header polyline_id,c1,c2.
void write_contour_csv(const ContourSet& contours, std::ostream& os);

}  // namespace qcorr
