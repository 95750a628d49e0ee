#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unipart/mesh.hpp"
#include "unipart/tensor.hpp"
#include "unipart/vae.hpp"

namespace unipart::latentseg {

using tad::Tensor;

struct LatentSegConfig {
  std::size_t fps_prompts = 32;  // k; bounds the number of parts
  double nms_iou = 0.5;
  bool dense_then_filter = true;  // dense masks filtered to FPS prompts,
                                  // vs masks computed for FPS prompts only
};

struct PartLatentGroup {
  int part_id = 0;
  std::vector<std::size_t> indices;  // subset of [0, L)
  Tensor latents;                    // gathered rows of Z
  mesh::Vec3 centroid;               // mean of member anchors
};

struct SegmentationResult {
  std::vector<vae::PartMask> masks;      // kept masks, by descending score
  std::vector<PartLatentGroup> groups;   // disjoint cover of [0, L)
  std::vector<mesh::Vec3> anchors;       // L decoded anchor positions
  std::vector<std::size_t> kept_prompts; // prompt index per kept mask
};

// One mask per prompt index r = 0..L-1.
std::vector<vae::PartMask> dense_masks(const vae::GeomSegVae& model,
                                       const Tensor& z);

// FPS over decoded anchors; k <= L required.
std::vector<std::size_t> select_prompts(const std::vector<mesh::Vec3>& anchors,
                                        std::size_t k);

double mask_iou(const std::vector<bool>& a, const std::vector<bool>& b);

// Greedy NMS by descending score (ties to the lower index); returns kept
// indices in the order they were kept.
std::vector<std::size_t> nms_masks(const std::vector<std::vector<bool>>& masks,
                                   const std::vector<double>& scores,
                                   double iou_threshold = 0.5);

// Resolves kept masks into a partition: multiply-claimed latents go to the
// highest-score claiming mask, unclaimed latents to the nearest group
// centroid. Throws if no masks are given.
std::vector<int> assign_partition(const std::vector<std::vector<bool>>& kept,
                                  const std::vector<double>& scores,
                                  const std::vector<mesh::Vec3>& anchors);

// Full stage: dense (or FPS-only) mask decoding, FPS prompt selection, NMS,
// and partition assignment.
SegmentationResult segment(const vae::GeomSegVae& model, const Tensor& z,
                           const LatentSegConfig& config);

// Colored anchor point cloud for inspection; one color per group.
void write_segmentation_ply(const SegmentationResult& result,
                            const std::string& path);

}  // namespace unipart::latentseg
