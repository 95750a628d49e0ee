#pragma once

#include <cstdint>
#include <vector>

#include "unipart/flow.hpp"
#include "unipart/latent_seg.hpp"
#include "unipart/mesh.hpp"
#include "unipart/nn.hpp"
#include "unipart/procgen.hpp"
#include "unipart/vae.hpp"

namespace unipart::partdit {

using tad::Tensor;

struct PartDitConfig {
  std::size_t num_latents = 256;  // L tokens per space
  std::size_t latent_dim = 32;    // d
  std::size_t d_model = 256;
  std::size_t depth = 8;  // alternating local/global blocks, local first
  std::size_t heads = 8;
  int image_resolution = 64;
  int patch_size = 16;
  double cond_dropout = 0.1;  // image only; latent conditions never drop

  // ablation toggles
  bool use_ncs = true;          // compose via the normalized-space decode
  bool local_attention = true;  // false: every block attends over all 2L
  bool space_embedding = true;  // false: both spaces share one embedding
  bool point_condition = false; // part condition from raw surface points
  bool whole_condition = true;  // include whole-latent tokens
};

// gcs: global coordinate space; ncs: the part normalized to [0,1]^3.
struct DualSpaceLatent {
  Tensor gcs;  // [L, d]
  Tensor ncs;  // [L, d]
};

struct PartCondition {
  const procgen::ConditionImage* image = nullptr;  // null = dropped (CFG)
  Tensor whole;                                    // [L, d] whole latent
  Tensor part_latents;                             // [n, d], n <= L
  std::vector<mesh::Vec3> part_points;  // used by the point-form ablation
};

// Dual-space part-level diffusion transformer: 2L latent tokens tagged by
// space, alternating within-space and full attention, cross-attending to
// image / whole-latent / part-latent condition tokens with per-set type
// embeddings. Standardization buffers are fit per space.
class PartDit {
 public:
  PartDit(PartDitConfig config, std::uint64_t seed);

  // Velocities for standardized noisy latents; both [L, d].
  DualSpaceLatent forward_dual(const Tensor& gcs_t, const Tensor& ncs_t,
                               double t, const PartCondition& cond) const;

  void fit_stats(const std::vector<Tensor>& gcs_targets,
                 const std::vector<Tensor>& ncs_targets);
  Tensor standardize_gcs(const Tensor& z) const;
  Tensor standardize_ncs(const Tensor& z) const;
  Tensor destandardize_gcs(const Tensor& z) const;
  Tensor destandardize_ncs(const Tensor& z) const;

  struct StepResult {
    double loss = 0.0;       // loss_gcs + loss_ncs
    double loss_gcs = 0.0;
    double loss_ncs = 0.0;
    bool dropped_image = false;
  };
  // Shared t, independent noise per space; CFM losses summed.
  StepResult train_step(const DualSpaceLatent& target,
                        const PartCondition& cond, nn::AdamW& opt, Rng& rng);

  // Joint sampling of both spaces from one trajectory; unstandardized output.
  DualSpaceLatent generate_part(const PartCondition& cond,
                                const flow::SamplerConfig& sampler) const;

  // The block-diagonal additive mask used by local blocks, [2L, 2L].
  const std::vector<double>& local_mask() const { return local_mask_; }

  nn::ParamStore& params() { return params_; }
  const nn::ParamStore& params() const { return params_; }
  const PartDitConfig& config() const { return config_; }

 private:
  Tensor condition_tokens(const PartCondition& cond) const;

  PartDitConfig config_;
  nn::ParamStore params_;
  std::vector<double> local_mask_;

  nn::Linear in_proj_;      // d -> d_model
  Tensor space_gcs_, space_ncs_;  // [1, d_model]
  nn::Linear patch_embed_;
  Tensor patch_pos_;
  Tensor null_image_;       // [1, d_model]
  nn::Linear whole_proj_;   // d -> d_model
  nn::Linear part_proj_;    // d+1 -> d_model (validity flag channel)
  nn::Linear point_proj_;   // 3 -> d_model (ablation pathway)
  Tensor type_image_, type_whole_, type_part_;  // [1, d_model]
  nn::Mlp t_embed_;
  std::vector<nn::DiTBlock> blocks_;
  nn::LayerNorm out_norm_;
  nn::Linear out_proj_;  // d_model -> d, zero-initialized
  Tensor stat_mean_gcs_, stat_std_gcs_, stat_mean_ncs_, stat_std_ncs_;
};

// Occupancy mesh of a latent via the frozen geometry decoder on a regular
// grid over `domain` (queries chunked; probability isolevel 0.5).
mesh::McResult decode_latent_mesh(const vae::GeomSegVae& model,
                                  const Tensor& z, int resolution,
                                  const mesh::Aabb& domain);

struct ComposeResult {
  mesh::TriMesh mesh;    // in global coordinates; empty if the part failed
  bool used_fallback = false;  // ncs decode empty, gcs used directly
  bool failed = false;         // gcs decode empty
};

// bbox from the gcs decode; geometry from the ncs decode normalized to
// [0,1]^3 and mapped into the bbox per axis. Honors the use_ncs ablation.
ComposeResult decode_and_compose(const vae::GeomSegVae& model,
                                 const DualSpaceLatent& dual, int resolution,
                                 bool use_ncs = true);

struct GeneratedObject {
  std::vector<mesh::TriMesh> parts;  // composed, global coordinates
  mesh::TriMesh combined;            // concatenation with part labels
  std::size_t failed_parts = 0;
  std::size_t fallback_parts = 0;
};

// Full part stage: per-group dual-space generation, decode, compose, concat.
// Per-part seeds derive from sampler.seed + group id. Throws only if every
// part fails.
GeneratedObject generate_object(const PartDit& model,
                                const vae::GeomSegVae& vae_model,
                                const procgen::ConditionImage& image,
                                const Tensor& whole_latent,
                                const latentseg::SegmentationResult& seg,
                                const flow::SamplerConfig& sampler,
                                int mc_resolution);

}  // namespace unipart::partdit
