#pragma once

#include <map>
#include <string>
#include <vector>

#include "unipart/run_config.hpp"

namespace unipart::pipeline {

// Outcome of one pipeline stage: scalar metrics plus the artifact paths it
// wrote. Every stage also appends a manifest entry (with input checkpoint
// hashes and wall time) and drops the resolved config into its output
// directory.
struct StageReport {
  std::map<std::string, double> metrics;
  std::vector<std::string> outputs;
};

// Writes train.ds / test.ds under out_dir. Record seeds derive from
// config.seed, so the stage is a pure function of the config.
StageReport run_dataset(const RunConfig& config, const std::string& out_dir);

// Two-phase VAE training (geometry-only curriculum, then joint) on train.ds;
// writes vae.ckpt and reports held-out occupancy / segmentation accuracy.
// `init_ckpt` (optional) warm-starts the parameters from an earlier run's
// checkpoint; optimizer state starts fresh. The checkpoint is also refreshed
// every 2000 steps so long runs can be inspected or extended.
StageReport run_train_vae(const RunConfig& config,
                          const std::string& dataset_path,
                          const std::string& out_dir,
                          const std::string& init_ckpt = "");

// Anchor-position decoder against the frozen encoder; writes pos.ckpt.
StageReport run_train_pos(const RunConfig& config,
                          const std::string& dataset_path,
                          const std::string& vae_ckpt,
                          const std::string& out_dir);

// Image-conditioned whole-object latent diffusion; writes whole.ckpt
// (standardization buffers included).
StageReport run_train_whole(const RunConfig& config,
                            const std::string& dataset_path,
                            const std::string& vae_ckpt,
                            const std::string& out_dir,
                            const std::string& init_ckpt = "");

// Dual-space part diffusion with ground-truth-label latent groups as the
// part condition; writes part.ckpt.
StageReport run_train_part(const RunConfig& config,
                           const std::string& dataset_path,
                           const std::string& vae_ckpt,
                           const std::string& out_dir,
                           const std::string& init_ckpt = "");

// Full image -> whole latent -> segmentation -> parts -> composed mesh run
// for one dataset record. Writes whole_latent.ckpt, whole.obj,
// segmentation.{ply,json}, parts/part_*.obj, combined.obj, exploded.obj, and
// stats.json under out_dir.
StageReport run_generate(const RunConfig& config,
                         const std::string& dataset_path, std::size_t index,
                         const std::string& vae_ckpt,
                         const std::string& whole_ckpt,
                         const std::string& part_ckpt,
                         const std::string& pos_ckpt,
                         const std::string& out_dir);

// Stage 1 only: image -> whole latent (+ decoded whole.obj).
StageReport run_generate_whole(const RunConfig& config,
                               const std::string& dataset_path,
                               std::size_t index,
                               const std::string& vae_ckpt,
                               const std::string& whole_ckpt,
                               const std::string& out_dir);

// Segmentation of a stored whole latent into part latent groups.
StageReport run_segment_latent(const RunConfig& config,
                               const std::string& latent_path,
                               const std::string& vae_ckpt,
                               const std::string& pos_ckpt,
                               const std::string& out_dir);

// Stage 2 only: stored whole latent (re-segmented) + condition image ->
// generated parts.
StageReport run_generate_parts(const RunConfig& config,
                               const std::string& latent_path,
                               const std::string& dataset_path,
                               std::size_t index,
                               const std::string& vae_ckpt,
                               const std::string& part_ckpt,
                               const std::string& pos_ckpt,
                               const std::string& out_dir);

// Compares generated objects under pred_root (one obj_<index>/ directory per
// record, as written by run_generate) against the dataset's ground truth;
// writes report.json and report.csv.
StageReport run_eval(const RunConfig& config, const std::string& dataset_path,
                     const std::string& pred_root,
                     const std::string& out_dir);

// Ground-truth export of one record: labeled mesh, per-part meshes, exploded
// view, surface point cloud, and the condition image as PGM files.
StageReport run_export(const RunConfig& config,
                       const std::string& dataset_path, std::size_t index,
                       const std::string& out_dir);

// Directional ablation comparison: per-part Chamfer on the smallest-quartile
// ground-truth parts (full vs no-NCS) and composition failure counts (full vs
// no-space-embedding). Reads stats.json/parts from the three pred roots;
// writes ablation_report.json.
StageReport run_ablation_eval(const RunConfig& config,
                              const std::string& dataset_path,
                              const std::string& full_root,
                              const std::string& no_ncs_root,
                              const std::string& no_space_root,
                              const std::string& out_dir);

// Throws a std::runtime_error naming `producer_cmd` when `path` is missing.
void require_artifact(const std::string& path, const std::string& producer_cmd);

}  // namespace unipart::pipeline
