#pragma once

#include <cstdint>
#include <vector>

#include "unipart/nn.hpp"
#include "unipart/procgen.hpp"
#include "unipart/rng.hpp"
#include "unipart/tensor.hpp"

namespace unipart::vae {

using tad::Tensor;

struct VaeConfig {
  std::size_t num_latents = 256;  // L
  std::size_t latent_dim = 32;    // d
  std::size_t width = 128;        // transformer width
  std::size_t heads = 4;
  std::size_t encoder_blocks = 2;  // self-attention after the cross-attention
  std::size_t decoder_blocks = 2;  // shared latent self-attention per decoder
  std::size_t query_freqs = 6;     // positional encoding octaves for queries

  double lambda_kl = 1e-3;
  double focal_weight = 1.0;
  double dice_weight = 1.0;
  double score_weight = 1.0;
  std::size_t seg_prompts = 16;
  bool squared_error_recon = false;  // replace BCE with squared error
};

// Encoder output: Gaussian posterior over L latent tokens plus the anchor
// points (FPS-downsampled encoder queries) and their ground-truth labels.
struct LatentSet {
  Tensor mean;     // [L, d]
  Tensor logvar;   // [L, d]
  Tensor sample;   // [L, d]
  std::vector<mesh::Vec3> anchor_source;
  std::vector<int> anchor_labels;
};

struct PartMask {
  std::vector<double> logits;  // length L; mask = logits > 0
  double score = 0.0;          // predicted IoU, [0,1]
};

struct VaeLoss {
  Tensor total;
  double recon = 0.0;
  double seg = 0.0;
  double kl = 0.0;
  double occupancy_accuracy = 0.0;  // thresholded at 0.5, on the query batch
};

// Geometry + segmentation set-latent VAE. Encodes labeled surface points into
// L latent vectors; decodes occupancy, promptable part masks, and anchor
// positions. Anchor-position decoding uses a separate parameter store so it
// can be trained against a frozen encoder.
class GeomSegVae {
 public:
  GeomSegVae(VaeConfig config, std::uint64_t seed);

  // Queries are the FPS-downsampled L points of P; each input point carries
  // position, normal, and label/num_parts (zeroed during the geometry-only
  // curriculum phase). Throws if P has fewer than L points.
  LatentSet encode(const procgen::SurfaceSamples& points, int num_parts,
                   Rng& noise_rng, bool zero_label_channel = false) const;

  // Occupancy logits [B, 1] for queries in [-1,1]^3.
  Tensor decode_geometry(const Tensor& z,
                         const std::vector<mesh::Vec3>& queries) const;

  // Mask logits [num_prompts, L] and score logits [num_prompts, 1].
  struct SegOutput {
    Tensor mask_logits;
    Tensor score_logits;
  };
  SegOutput decode_segmentation_batch(
      const Tensor& z, const std::vector<std::size_t>& prompts) const;
  PartMask decode_segmentation(const Tensor& z, std::size_t prompt) const;

  // Per-latent anchor estimates [L, 3].
  Tensor decode_position(const Tensor& z) const;

  // recon (BCE or squared error) + seg (focal gamma=2 + dice + score MSE)
  // + lambda_kl * kl_scale * KL, over the given query batch and
  // `seg_prompts` prompts. `kl_scale` supports warmup schedules.
  VaeLoss loss(const LatentSet& latents, const procgen::FieldQuery& queries,
               Rng& prompt_rng, bool enable_seg, double kl_scale = 1.0) const;

  // MSE between decode_position(z) and the recorded anchors. `z` should be
  // encoded under NoGradGuard so encoder parameters receive no gradient.
  Tensor position_loss(const Tensor& z,
                       const std::vector<mesh::Vec3>& anchors) const;

  nn::ParamStore& params() { return params_; }
  const nn::ParamStore& params() const { return params_; }
  nn::ParamStore& pos_params() { return pos_params_; }
  const nn::ParamStore& pos_params() const { return pos_params_; }
  const VaeConfig& config() const { return config_; }

 private:
  Tensor point_features(const procgen::SurfaceSamples& points,
                        const std::vector<std::size_t>& subset, int num_parts,
                        bool zero_label) const;
  Tensor embed_queries(const std::vector<mesh::Vec3>& queries) const;
  Tensor process_latents(const Tensor& z, const std::string& which) const;

  VaeConfig config_;
  nn::ParamStore params_;
  nn::ParamStore pos_params_;

  nn::Linear input_embed_;            // 7 + 6*query_freqs -> width
  nn::CrossAttentionBlock enc_cross_;
  std::vector<nn::TransformerBlock> enc_blocks_;
  nn::LayerNorm enc_norm_;
  nn::Linear head_mean_, head_logvar_;  // width -> d, zero-initialized

  nn::Linear geom_in_;  // d -> width
  std::vector<nn::TransformerBlock> geom_blocks_;
  nn::Linear query_embed_;  // 3 + 6*query_freqs -> width
  nn::CrossAttentionBlock geom_cross_;
  nn::LayerNorm geom_norm_;
  nn::Linear geom_out_;  // width -> 1

  nn::Linear seg_in_;  // d -> width
  std::vector<nn::TransformerBlock> seg_blocks_;
  nn::LayerNorm seg_norm_;
  nn::Linear seg_q_, seg_k_;  // width -> width
  nn::Mlp score_head_;        // width -> width -> width (reduced to 1)
  nn::Linear score_out_;      // width -> 1

  nn::Linear pos_fc1_;  // d -> width (in pos_params_)
  nn::Linear pos_fc2_;  // width -> 3
};

// Standard diagonal-Gaussian KL to N(0, I): per-latent row sum over channels,
// averaged over rows.
Tensor kl_divergence(const Tensor& mu, const Tensor& logvar);

// Focal loss (gamma 2) with logits, mean over all elements.
Tensor focal_loss(const Tensor& logits, const Tensor& targets, double gamma = 2.0);

// Soft dice loss per row, averaged over rows.
Tensor dice_loss(const Tensor& logits, const Tensor& targets);

}  // namespace unipart::vae
