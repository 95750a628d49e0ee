#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unipart/mesh.hpp"

namespace unipart::procgen {

using mesh::Aabb;
using mesh::Vec3;

enum class PrimitiveKind : std::uint8_t { Box = 0, Sphere, Cylinder, Capsule };

// One part of a CSG-union object. `params` is interpreted per kind:
//   Box:      half extents (x,y,z)
//   Sphere:   radius in x (y,z unused)
//   Cylinder: radius in x, half height in y (axis y before rotation)
//   Capsule:  radius in x, half height in y
struct PartPrimitive {
  PrimitiveKind kind = PrimitiveKind::Sphere;
  Vec3 params{0.3, 0.3, 0.3};
  Vec3 rotation{0, 0, 0};  // XYZ Euler, radians
  Vec3 translation{0, 0, 0};
  int part_id = 0;
};

struct ShapeSpec {
  std::vector<PartPrimitive> parts;
  int num_parts() const;
};

struct GenConfig {
  int min_parts = 2;
  int max_parts = 5;
  // relative odds of box/sphere/cylinder/capsule
  double primitive_mix[4] = {1.0, 1.0, 1.0, 1.0};
};

// Deterministic multi-part object: a chain of touching primitives, scaled to
// fit inside [-0.9, 0.9]^3. Throws on unsatisfiable configs (min_parts < 2,
// min > max, all-zero mix).
ShapeSpec generate_shape(std::uint64_t seed, const GenConfig& config);

double primitive_sdf(const PartPrimitive& prim, const Vec3& p);

struct SdfLabel {
  double sdf = 0.0;
  int label = 0;
};

// Signed distance to the part union (exact sign) and the id of the nearest
// part; equidistant points resolve to the lowest part id.
SdfLabel sdf_and_label(const ShapeSpec& spec, const Vec3& p);
double union_sdf(const ShapeSpec& spec, const Vec3& p);
bool occupancy(const ShapeSpec& spec, const Vec3& p);
Vec3 sdf_normal(const ShapeSpec& spec, const Vec3& p);

struct SurfaceSamples {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<int> labels;
  std::size_t size() const { return positions.size(); }
};

// Area-proportional labeled samples on the union boundary. Points covered by
// another part are rejected, so per-part counts track exposed area.
SurfaceSamples sample_surface(const ShapeSpec& spec, std::size_t count,
                              std::uint64_t seed);

struct ConditionImage {
  int width = 64;
  int height = 64;
  std::vector<double> silhouette;  // row-major, {0,1}
  std::vector<double> depth;       // [0,1] under the silhouette, else 0
};

// Fixed orthographic camera on the +z axis looking along -z; the image plane
// covers [-1,1]^2 in world x/y. Depth 0 is the near plane z=+1.
ConditionImage render_condition(const ShapeSpec& spec, int resolution = 64);

struct FieldQuery {
  std::vector<Vec3> points;
  std::vector<double> occupancy;  // ground truth, {0,1}
};

// Mixed query batch: `near_fraction` of the points are surface samples with
// Gaussian offsets (sigma 0.05), the rest uniform in [-1,1]^3.
FieldQuery sample_field_queries(const ShapeSpec& spec, std::size_t count,
                                double near_fraction, std::uint64_t seed);

struct DatasetRecord {
  std::uint64_t seed = 0;
  ShapeSpec spec;
  SurfaceSamples surface;
  ConditionImage image;
};

struct DatasetConfig {
  GenConfig gen;
  std::size_t surface_samples = 8192;
  int image_resolution = 64;
};

// Pure function of (seed, config).
DatasetRecord generate_record(std::uint64_t seed, const DatasetConfig& config);

// Binary container: magic "UPDS0001", u64 manifest length, JSON manifest,
// then per-record binary blocks. Round trips are byte-exact.
void write_dataset(const std::vector<DatasetRecord>& records,
                   const std::string& path);
std::vector<DatasetRecord> read_dataset(const std::string& path);

// Mesh of the union via marching cubes on the occupancy field, with per-face
// part labels from the nearest part at each face centroid.
mesh::TriMesh extract_mesh(const ShapeSpec& spec, int resolution = 64);
mesh::TriMesh extract_part_mesh(const ShapeSpec& spec, int part_id,
                                int resolution = 64);

}  // namespace unipart::procgen
