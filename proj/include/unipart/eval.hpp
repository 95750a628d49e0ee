#pragma once

#include <cstdint>
#include <vector>

#include "unipart/mesh.hpp"

namespace unipart::eval {

using mesh::TriMesh;
using mesh::Vec3;

struct EvalConfig {
  std::size_t samples_per_mesh = 10000;
  std::uint64_t sample_seed = 0;
  bool squared_chamfer = false;   // squared-distance variant
  bool per_metric_best = false;   // best F per rotation instead of CD-optimal
};

// Symmetric Chamfer distance: mean_a min_b ||a-b|| + mean_b min_a ||a-b||
// (Euclidean by default; squared by flag). Grid-accelerated; throws on empty
// input.
double chamfer(const std::vector<Vec3>& a, const std::vector<Vec3>& b,
               bool squared = false);

// Brute-force O(n^2) reference for testing.
double chamfer_bruteforce(const std::vector<Vec3>& a,
                          const std::vector<Vec3>& b, bool squared = false);

// F-score at threshold tau: harmonic mean of precision (fraction of a within
// tau of b) and recall.
double fscore(const std::vector<Vec3>& a, const std::vector<Vec3>& b,
              double tau);

struct MetricReport {
  double cd = 0.0;
  double f_at_005 = 0.0;
  double f_at_010 = 0.0;
  int best_rotation = 0;  // degrees about +Y
};

// Normalizes both meshes to [-1,1]^3, samples surfaces, evaluates the four
// +Y rotations {0,90,180,270} of the prediction, and reports the CD-best
// rotation (per-metric best behind the config flag).
MetricReport pose_search_eval(const TriMesh& pred, const TriMesh& gt,
                              const EvalConfig& config = {});

// Mean IoU under optimal one-to-one matching (Hungarian) between predicted
// groups and ground-truth parts; unmatched ground-truth parts score 0; mean
// over ground-truth parts. Label vectors must have equal length.
double miou(const std::vector<int>& pred_labels,
            const std::vector<int>& gt_labels);

// Exhaustive-matching reference for testing (small part counts only).
double miou_bruteforce(const std::vector<int>& pred_labels,
                       const std::vector<int>& gt_labels);

// Maximum-total-weight one-to-one assignment of rows to columns; returns the
// column index per row (-1 when rows > cols leaves some rows unmatched).
std::vector<int> hungarian_max(const std::vector<std::vector<double>>& weight);

// Rotation by `degrees` (multiple of 90) about +Y.
TriMesh rotate_y(const TriMesh& m, int degrees);

}  // namespace unipart::eval
