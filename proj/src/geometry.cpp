#include "qcorr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mc_tables.hpp"
#include "qcorr/format.hpp"

namespace qcorr {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void require_resolution(int resolution) {
  if (resolution < 33 || resolution % 2 == 0)
    throw std::invalid_argument("grid resolution must be odd and >= 33");
}

// Grid coordinate with exact negation symmetry: coords[n-1-k] == -coords[k].
double grid_coord(int k, int n) {
  return static_cast<double>(2 * k - (n - 1)) / static_cast<double>(n - 1);
}

// Union-find with path halving.
struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> label_components(const std::vector<std::array<int, 3>>& triangles) {
  DisjointSet ds(static_cast<int>(triangles.size()));
  std::unordered_map<int, int> first_triangle_with_vertex;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t)
    for (int v : triangles[t]) {
      auto [it, inserted] = first_triangle_with_vertex.try_emplace(v, t);
      if (!inserted) ds.unite(t, it->second);
    }
  std::vector<int> labels(triangles.size());
  std::unordered_map<int, int> dense;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const int root = ds.find(t);
    auto [it, inserted] = dense.try_emplace(root, static_cast<int>(dense.size()));
    labels[t] = it->second;
  }
  return labels;
}

struct MeshBuilder {
  int n = 0;
  const std::vector<double>* values = nullptr;
  const std::vector<double>* coords = nullptr;
  double level = 0.0;
  IsoMesh mesh;
  std::unordered_map<int64_t, int> edge_vertex;

  int point_index(int ix, int iy, int iz) const { return (iz * n + iy) * n + ix; }

  // Welded vertex on the grid edge starting at (ix,iy,iz) along axis.
  int vertex_on_edge(int ix, int iy, int iz, int axis) {
    const int64_t key = 3 * static_cast<int64_t>(point_index(ix, iy, iz)) + axis;
    auto [it, inserted] = edge_vertex.try_emplace(key, static_cast<int>(mesh.vertices.size()));
    if (inserted) {
      int jx = ix + (axis == 0), jy = iy + (axis == 1), jz = iz + (axis == 2);
      const double f0 = (*values)[point_index(ix, iy, iz)];
      const double f1 = (*values)[point_index(jx, jy, jz)];
      const double t = std::clamp((level - f0) / (f1 - f0), 0.0, 1.0);
      Eigen::Vector3d p((*coords)[ix], (*coords)[iy], (*coords)[iz]);
      const Eigen::Vector3d q((*coords)[jx], (*coords)[jy], (*coords)[jz]);
      mesh.vertices.push_back(p + t * (q - p));
    }
    return it->second;
  }
};

// Local edge index -> (origin corner index, axis).
constexpr std::array<std::array<int, 2>, 12> kEdgeOrigin = {{
    {0, 0}, {1, 1}, {3, 0}, {0, 1}, {4, 0}, {5, 1},
    {7, 0}, {4, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2},
}};

IsoMesh extract_mesh(const std::vector<double>& values, const std::vector<double>& coords,
                     double level, const std::vector<uint8_t>* physical) {
  const int n = static_cast<int>(coords.size());
  MeshBuilder b;
  b.n = n;
  b.values = &values;
  b.coords = &coords;
  b.level = level;

  for (int iz = 0; iz + 1 < n; ++iz)
    for (int iy = 0; iy + 1 < n; ++iy)
      for (int ix = 0; ix + 1 < n; ++ix) {
        int corner_pt[8];
        for (int k = 0; k < 8; ++k)
          corner_pt[k] = b.point_index(ix + mc::kCornerOffset[k][0], iy + mc::kCornerOffset[k][1],
                                       iz + mc::kCornerOffset[k][2]);
        if (physical) {
          bool any = false;
          for (int k = 0; k < 8 && !any; ++k) any = (*physical)[corner_pt[k]] != 0;
          if (!any) continue;
        }
        int cube_index = 0;
        for (int k = 0; k < 8; ++k)
          if (values[corner_pt[k]] < level) cube_index |= 1 << k;
        if (mc::edge_table[cube_index] == 0) continue;

        int edge_vert[12];
        std::fill(edge_vert, edge_vert + 12, -1);
        for (int e = 0; e < 12; ++e) {
          if (!(mc::edge_table[cube_index] & (1 << e))) continue;
          const int oc = kEdgeOrigin[e][0];
          edge_vert[e] = b.vertex_on_edge(ix + mc::kCornerOffset[oc][0],
                                          iy + mc::kCornerOffset[oc][1],
                                          iz + mc::kCornerOffset[oc][2], kEdgeOrigin[e][1]);
        }
        const auto& tri = mc::tri_table[cube_index];
        for (int i = 0; tri[i] != -1; i += 3) {
          const std::array<int, 3> t = {edge_vert[tri[i]], edge_vert[tri[i + 1]],
                                        edge_vert[tri[i + 2]]};
          if (t[0] < 0 || t[1] < 0 || t[2] < 0) continue;
          if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
          b.mesh.triangles.push_back(t);
        }
      }

  b.mesh.component_id = label_components(b.mesh.triangles);
  return b.mesh;
}

IsoMesh sample_and_extract(const ScalarField3& field, double level, int resolution,
                           const RegionMask& clip) {
  const int n = resolution;
  std::vector<double> coords(n);
  for (int k = 0; k < n; ++k) coords[k] = grid_coord(k, n);

  std::vector<double> values(static_cast<size_t>(n) * n * n);
  std::vector<uint8_t> physical;
  if (clip) physical.resize(values.size());
  size_t idx = 0;
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix, ++idx) {
        const Eigen::Vector3d c(coords[ix], coords[iy], coords[iz]);
        values[idx] = field(c);
        if (clip) physical[idx] = clip(c) ? 1 : 0;
      }
  return extract_mesh(values, coords, level, clip ? &physical : nullptr);
}

double min_deformed_eigenvalue(const Eigen::Vector3d& c, double r, double s) {
  const Eigen::Vector4d e = deformed_eigenvalues(DeformedBellDiag(r, s, c));
  return std::min(e[1], e[3]);
}

}  // namespace

bool in_tetrahedron(const Eigen::Vector3d& c, double tol) {
  return 1.0 - c[0] + c[1] + c[2] >= -tol && 1.0 + c[0] - c[1] + c[2] >= -tol &&
         1.0 + c[0] + c[1] - c[2] >= -tol && 1.0 - c[0] - c[1] - c[2] >= -tol;
}

bool in_octahedron(const Eigen::Vector3d& c, double tol) {
  return c.cwiseAbs().sum() <= 1.0 + tol;
}

ScalarField3 field_dg_belldiag() {
  return [](const Eigen::Vector3d& c) {
    const Eigen::Vector3d c2 = c.cwiseAbs2();
    return 0.25 * (c2.sum() - c2.maxCoeff());
  };
}

ScalarField3 field_d_belldiag() {
  return [](const Eigen::Vector3d& c) {
    const double i_part = 0.25 * (xlog2x(1.0 - c[0] - c[1] - c[2]) + xlog2x(1.0 - c[0] + c[1] + c[2]) +
                                  xlog2x(1.0 + c[0] - c[1] + c[2]) + xlog2x(1.0 + c[0] + c[1] - c[2]));
    const double cm = std::min(c.cwiseAbs().maxCoeff(), 1.0);
    return i_part - 0.5 * (xlog2x(1.0 + cm) + xlog2x(1.0 - cm));
  };
}

ScalarField3 field_dg_deformed(double r, double s) {
  (void)s;  // the closed form does not depend on s
  const double r2 = r * r;
  return [r2](const Eigen::Vector3d& c) {
    const Eigen::Vector3d c2 = c.cwiseAbs2();
    return 0.25 * (c2.sum() + r2 - std::max({c2[0], c2[1], c2[2] + r2}));
  };
}

RegionMask clip_tetrahedron() {
  return [](const Eigen::Vector3d& c) { return in_tetrahedron(c); };
}

RegionMask clip_deformed(double r, double s) {
  return [r, s](const Eigen::Vector3d& c) {
    return min_deformed_eigenvalue(c, r, s) >= -kEqualityTol;
  };
}

IsoMesh iso_surface(const ScalarField3& field, double level, int resolution,
                    const RegionMask& clip) {
  require_resolution(resolution);
  if (level <= 0.0) return IsoMesh{};
  return sample_and_extract(field, level, resolution, clip);
}

IsoMesh deformation_boundary(double r, double s, int resolution) {
  require_resolution(resolution);
  if (std::abs(r) >= 1.0 || std::abs(s) >= 1.0)
    throw std::invalid_argument("deformation boundary requires |r| < 1 and |s| < 1");
  const ScalarField3 field = [r, s](const Eigen::Vector3d& c) {
    return min_deformed_eigenvalue(c, r, s);
  };
  return sample_and_extract(field, 0.0, resolution, {});
}

int connected_components(const IsoMesh& mesh) {
  if (mesh.triangles.empty()) return 0;
  const std::vector<int> labels = label_components(mesh.triangles);
  return 1 + *std::max_element(labels.begin(), labels.end());
}

int ContourSet::total_points() const {
  int n = 0;
  for (const auto& line : polylines) n += static_cast<int>(line.size());
  return n;
}

namespace {

struct SquareGrid {
  int n = 0;
  double plane = 0.0;
  std::vector<double> coords;
  std::vector<double> values;
  std::vector<uint8_t> physical;  // empty when unclipped

  int at(int ix, int iy) const { return iy * n + ix; }
};

struct SegmentSoup {
  std::vector<Eigen::Vector2d> points;
  std::map<std::pair<int64_t, int64_t>, int> point_ids;  // quantized position -> id
  std::set<std::pair<int, int>> segments;

  int weld(const Eigen::Vector2d& p) {
    const std::pair<int64_t, int64_t> key(llround(p.x() * 1e9), llround(p.y() * 1e9));
    auto [it, inserted] = point_ids.try_emplace(key, static_cast<int>(points.size()));
    if (inserted) points.push_back(p);
    return it->second;
  }

  void add(int a, int b) {
    if (a == b) return;
    segments.emplace(std::min(a, b), std::max(a, b));
  }
};

// Chain the segment soup into polylines: open paths first (started at nodes
// of degree != 2, ascending), then the remaining cycles. Neighbor choice is
// always the smallest unused id, so the output is deterministic.
std::vector<std::vector<Eigen::Vector2d>> chain_polylines(const SegmentSoup& soup) {
  std::map<int, std::vector<int>> adjacency;
  for (const auto& [a, b] : soup.segments) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& [_, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  std::set<std::pair<int, int>> unused = soup.segments;
  const auto take = [&unused](int a, int b) {
    return unused.erase({std::min(a, b), std::max(a, b)}) > 0;
  };
  const auto walk = [&](int start) {
    std::vector<int> path{start};
    int current = start;
    while (true) {
      bool advanced = false;
      for (int nbr : adjacency[current]) {
        if (take(current, nbr)) {
          path.push_back(nbr);
          current = nbr;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    return path;
  };

  std::vector<std::vector<Eigen::Vector2d>> out;
  const auto emit = [&](const std::vector<int>& path) {
    if (path.size() < 2) return;
    std::vector<Eigen::Vector2d> line;
    line.reserve(path.size());
    for (int id : path) line.push_back(soup.points[id]);
    out.push_back(std::move(line));
  };

  for (const auto& [node, nbrs] : adjacency)
    if (nbrs.size() != 2)
      while (std::any_of(nbrs.begin(), nbrs.end(),
                         [&](int b) { return unused.count({std::min(node, b), std::max(node, b)}); }))
        emit(walk(node));
  for (const auto& seg : soup.segments) {
    if (!unused.count(seg)) continue;
    emit(walk(seg.first));
  }
  return out;
}

}  // namespace

ContourSet contour_slice(const ScalarField3& field, double level, double plane_c3,
                         int resolution, const RegionMask& clip) {
  require_resolution(resolution);
  if (std::abs(plane_c3) > 1.0)
    throw std::invalid_argument("contour plane must satisfy |c3| <= 1");
  ContourSet out;
  out.plane_c3 = plane_c3;
  if (level <= 0.0) return out;

  SquareGrid g;
  g.n = resolution;
  g.plane = plane_c3;
  g.coords.resize(g.n);
  for (int k = 0; k < g.n; ++k) g.coords[k] = grid_coord(k, g.n);
  g.values.resize(static_cast<size_t>(g.n) * g.n);
  if (clip) g.physical.resize(g.values.size());
  for (int iy = 0; iy < g.n; ++iy)
    for (int ix = 0; ix < g.n; ++ix) {
      const Eigen::Vector3d c(g.coords[ix], g.coords[iy], plane_c3);
      g.values[g.at(ix, iy)] = field(c);
      if (clip) g.physical[g.at(ix, iy)] = clip(c) ? 1 : 0;
    }

  const double snap = 1e-12 * std::max(1.0, std::abs(level));
  const auto inside = [&](double v) { return v < level || std::abs(v - level) <= snap; };

  SegmentSoup soup;
  // Cell corners 0..3 counter-clockwise from (ix, iy); edges: 0 bottom,
  // 1 right, 2 top, 3 left.
  const int corner_dx[4] = {0, 1, 1, 0};
  const int corner_dy[4] = {0, 0, 1, 1};
  const int edge_corners[4][2] = {{0, 1}, {1, 2}, {3, 2}, {0, 3}};
  for (int iy = 0; iy + 1 < g.n; ++iy)
    for (int ix = 0; ix + 1 < g.n; ++ix) {
      double f[4];
      bool in[4];
      bool any_physical = !clip;
      for (int k = 0; k < 4; ++k) {
        const int px = ix + corner_dx[k], py = iy + corner_dy[k];
        f[k] = g.values[g.at(px, py)];
        in[k] = inside(f[k]);
        if (clip && g.physical[g.at(px, py)]) any_physical = true;
      }
      if (!any_physical) continue;
      const int config = (in[0] ? 1 : 0) | (in[1] ? 2 : 0) | (in[2] ? 4 : 0) | (in[3] ? 8 : 0);
      if (config == 0 || config == 15) continue;

      const auto edge_point = [&](int e) {
        const int a = edge_corners[e][0], b = edge_corners[e][1];
        double t = (level - f[a]) / (f[b] - f[a]);
        if (!std::isfinite(t)) t = 0.5;
        t = std::clamp(t, 0.0, 1.0);
        const Eigen::Vector2d pa(g.coords[ix + corner_dx[a]], g.coords[iy + corner_dy[a]]);
        const Eigen::Vector2d pb(g.coords[ix + corner_dx[b]], g.coords[iy + corner_dy[b]]);
        return soup.weld(pa + t * (pb - pa));
      };
      const auto segment = [&](int e1, int e2) { soup.add(edge_point(e1), edge_point(e2)); };

      switch (config) {
        case 1: case 14: segment(3, 0); break;
        case 2: case 13: segment(0, 1); break;
        case 3: case 12: segment(3, 1); break;
        case 4: case 11: segment(1, 2); break;
        case 6: case 9: segment(0, 2); break;
        case 7: case 8: segment(2, 3); break;
        case 5: case 10: {
          const double center =
              field(Eigen::Vector3d(0.5 * (g.coords[ix] + g.coords[ix + 1]),
                                    0.5 * (g.coords[iy] + g.coords[iy + 1]), plane_c3));
          const bool join_diag_02 = inside(center) == (config == 5);
          if (join_diag_02) {
            segment(0, 1);
            segment(2, 3);
          } else {
            segment(3, 0);
            segment(1, 2);
          }
          break;
        }
        default: break;
      }
    }

  out.polylines = chain_polylines(soup);
  return out;
}

bool contour_containment(double alpha, double plane_c3, int resolution) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("containment level alpha must lie in (0, 1)");
  const double h = 2.0 / (resolution - 1);
  const double eps = 3.0 * h;
  const ScalarField3 dg = field_dg_belldiag();
  const ScalarField3 d = field_d_belldiag();
  const RegionMask clip = clip_tetrahedron();

  const ContourSet dg_contour = contour_slice(dg, 0.5 * alpha * alpha, plane_c3, resolution, clip);
  for (const auto& line : dg_contour.polylines)
    for (const auto& p : line)
      if (d(Eigen::Vector3d(p.x(), p.y(), plane_c3)) > alpha + eps) return false;

  const ContourSet d_contour = contour_slice(d, alpha, plane_c3, resolution, clip);
  for (const auto& line : d_contour.polylines)
    for (const auto& p : line)
      if (std::sqrt(std::max(0.0, 2.0 * dg(Eigen::Vector3d(p.x(), p.y(), plane_c3)))) <
          alpha - eps)
        return false;
  return true;
}

void write_obj(const IsoMesh& mesh, std::ostream& os) {
  for (const auto& v : mesh.vertices)
    os << "v " << sig9(v.x()) << ' ' << sig9(v.y()) << ' ' << sig9(v.z()) << '\n';
  for (const auto& t : mesh.triangles)
    os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

void write_contour_csv(const ContourSet& contours, std::ostream& os) {
  os << "polyline_id,c1,c2\n";
  for (size_t i = 0; i < contours.polylines.size(); ++i)
    for (const auto& p : contours.polylines[i])
      os << i << ',' << sig17(p.x()) << ',' << sig17(p.y()) << '\n';
}

}  // namespace qcorr
