#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unipart/flow.hpp"
#include "unipart/nn.hpp"
#include "unipart/procgen.hpp"
#include "unipart/rng.hpp"
#include "unipart/tensor.hpp"

namespace unipart::wholedit {

using tad::Tensor;

struct WholeDitConfig {
  std::size_t num_latents = 256;  // L
  std::size_t latent_dim = 32;    // d
  std::size_t d_model = 256;
  std::size_t depth = 8;
  std::size_t heads = 8;
  int image_resolution = 64;
  int patch_size = 16;  // 16 tokens from 16x16 patches of the 64x64 image
  double cond_dropout = 0.1;
};

// Image-conditioned diffusion transformer over the whole-object latent set.
// Operates in standardized latent space: per-channel mean/std buffers are part
// of the parameter store (excluded from optimization) and applied at the
// train/generate boundary.
class WholeDit {
 public:
  WholeDit(WholeDitConfig config, std::uint64_t seed);

  // Velocity for standardized z_t [L, d]. Null condition when image is null.
  Tensor forward(const Tensor& z_t, double t,
                 const procgen::ConditionImage* image) const;

  // Per-channel standardization buffers, fit over training latents.
  void fit_stats(const std::vector<Tensor>& latents);
  Tensor standardize(const Tensor& z) const;
  Tensor destandardize(const Tensor& z) const;

  struct StepResult {
    double loss = 0.0;
    bool dropped_condition = false;
  };
  // One CFM step on an unstandardized latent: samples t and noise, applies
  // condition dropout, accumulates gradients, and steps the optimizer.
  StepResult train_step(const Tensor& z0, const procgen::ConditionImage& image,
                        nn::AdamW& opt, Rng& rng);

  // Unstandardized latent sampled with classifier-free guidance.
  Tensor generate(const procgen::ConditionImage& image,
                  const flow::SamplerConfig& sampler) const;

  nn::ParamStore& params() { return params_; }
  const nn::ParamStore& params() const { return params_; }
  const WholeDitConfig& config() const { return config_; }

 private:
  Tensor image_tokens(const procgen::ConditionImage& image) const;
  Tensor condition_vector(double t) const;

  WholeDitConfig config_;
  nn::ParamStore params_;

  nn::Linear in_proj_;     // d -> d_model
  nn::Linear patch_embed_;  // patch_size^2 * 2 -> d_model
  Tensor patch_pos_;        // [tokens, d_model] learned positions
  Tensor null_cond_;        // [1, d_model]
  nn::Mlp t_embed_;         // d_model -> d_model
  std::vector<nn::DiTBlock> blocks_;
  nn::LayerNorm out_norm_;
  nn::Linear out_proj_;  // d_model -> d, zero-initialized
  Tensor stat_mean_;     // [1, d] buffer
  Tensor stat_std_;      // [1, d] buffer
};

}  // namespace unipart::wholedit
