#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace unipart::mesh {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  double norm2() const { return dot(*this); }
  Vec3 normalized() const {
    const double n = norm();
    return n > 0.0 ? *this / n : Vec3{0, 0, 0};
  }
  Vec3 cwise_mul(const Vec3& o) const { return {x * o.x, y * o.y, z * o.z}; }
  Vec3 cwise_abs() const { return {std::abs(x), std::abs(y), std::abs(z)}; }
  Vec3 cwise_max(const Vec3& o) const {
    return {std::max(x, o.x), std::max(y, o.y), std::max(z, o.z)};
  }
  Vec3 cwise_min(const Vec3& o) const {
    return {std::min(x, o.x), std::min(y, o.y), std::min(z, o.z)};
  }
  double max_coeff() const { return std::max(x, std::max(y, z)); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

struct Aabb {
  Vec3 min{0, 0, 0};
  Vec3 max{0, 0, 0};
  Vec3 extent() const { return max - min; }
  Vec3 center() const { return (min + max) * 0.5; }
};

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<int> face_labels;  // empty, or one part id per face

  bool empty() const { return faces.empty(); }
  double surface_area() const;
  Aabb bounds() const;
};

struct AffineTransform {
  // v' = v.cwise_mul(scale) + offset
  Vec3 scale{1, 1, 1};
  Vec3 offset{0, 0, 0};
  Vec3 apply(const Vec3& v) const { return v.cwise_mul(scale) + offset; }
  AffineTransform inverse() const;
};

struct McResult {
  TriMesh mesh;
  bool no_crossing = false;  // entire field on one side of the isolevel
};

// Extracts the isosurface of a scalar field sampled on a (res+1)^3 grid over
// the given domain. Vertices on shared grid edges are welded, so the output
// of a well-resolved closed surface is a closed 2-manifold.
McResult marching_cubes(const std::function<double(const Vec3&)>& field,
                        int resolution, double isolevel = 0.5,
                        const Aabb& domain = {{-1, -1, -1}, {1, 1, 1}});

// Same, from precomputed grid values in z-fastest order:
// values[(ix*(res+1) + iy)*(res+1) + iz].
McResult marching_cubes_grid(const std::vector<double>& values, int resolution,
                             double isolevel = 0.5,
                             const Aabb& domain = {{-1, -1, -1}, {1, 1, 1}});

// Generalized winding number by exact per-triangle solid angle summation.
std::vector<double> winding_numbers(const TriMesh& mesh,
                                    const std::vector<Vec3>& points);
std::vector<bool> winding_number_contains(const TriMesh& mesh,
                                          const std::vector<Vec3>& points);

// Greedy farthest point sampling. Starts at index 0; each pick maximizes the
// minimum distance to the chosen set, ties broken by lowest index.
std::vector<std::size_t> farthest_point_sample(const std::vector<Vec3>& points,
                                               std::size_t k);

struct NormalizeResult {
  TriMesh mesh;
  AffineTransform transform;  // maps original vertices to normalized ones
};

enum class TargetBox { Symmetric,  // [-1,1]^3
                       Unit };     // [0,1]^3

// Uniform-scale fit: the largest extent maps to the full target range, the
// mesh is centered. Throws on empty or zero-extent input.
NormalizeResult normalize_mesh(const TriMesh& mesh, TargetBox target);

// Per-axis affine [0,1]^3 -> target_box. Axes with extent below 1e-6 are
// clamped to 1e-6 with a warning on stderr.
TriMesh compose_part(const TriMesh& mesh_ncs, const Aabb& target_box);

TriMesh concat_meshes(const std::vector<TriMesh>& meshes);

// True when every edge is shared by exactly two faces.
bool is_closed_manifold(const TriMesh& mesh);
int euler_characteristic(const TriMesh& mesh);

// Area-weighted uniform surface sampling (deterministic for a given seed).
std::vector<Vec3> sample_mesh_surface(const TriMesh& mesh, std::size_t count,
                                      std::uint64_t seed);

// ASCII OBJ with one "g part_<id>" group per face label.
void write_obj(const TriMesh& mesh, const std::string& path);
TriMesh read_obj(const std::string& path);

// ASCII PLY mesh I/O.
void write_ply(const TriMesh& mesh, const std::string& path);
TriMesh read_ply(const std::string& path);

// ASCII PLY colored point cloud (colors as 0..255 rgb per point).
void write_point_cloud_ply(const std::vector<Vec3>& points,
                           const std::vector<std::array<int, 3>>& colors,
                           const std::string& path);

}  // namespace unipart::mesh
