#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unipart/rng.hpp"
#include "unipart/tensor.hpp"

namespace unipart::nn {

using tad::Shape;
using tad::Tensor;

// Ordered, named parameter registry. Checkpoints serialize stores by name.
class ParamStore {
 public:
  Tensor create(const std::string& name, Shape shape, double init_std,
                Rng& rng);
  Tensor create_const(const std::string& name, Shape shape, double value);
  bool has(const std::string& name) const;
  Tensor get(const std::string& name) const;
  const std::vector<std::pair<std::string, Tensor>>& items() const {
    return items_;
  }
  std::size_t param_count() const;
  void zero_grad();
  void set_trainable(bool trainable);
  std::uint64_t checksum() const;  // FNV-1a over raw parameter bytes

 private:
  Tensor insert(const std::string& name, Tensor t);
  std::vector<std::pair<std::string, Tensor>> items_;
  std::map<std::string, std::size_t> index_;
};

struct Linear {
  Tensor w;  // [in, out]
  Tensor b;  // [1, out]
  static Linear create(ParamStore& store, const std::string& prefix,
                       std::size_t in, std::size_t out, Rng& rng,
                       double w_std = -1.0);
  Tensor operator()(const Tensor& x) const;
};

struct LayerNorm {
  Tensor gamma;  // [1, dim]
  Tensor beta;   // [1, dim]
  static LayerNorm create(ParamStore& store, const std::string& prefix,
                          std::size_t dim);
  Tensor operator()(const Tensor& x) const;
};

struct Mlp {
  Linear fc1, fc2;
  static Mlp create(ParamStore& store, const std::string& prefix,
                    std::size_t dim, std::size_t hidden, Rng& rng);
  Tensor operator()(const Tensor& x) const;
};

struct MultiheadAttention {
  Linear proj_q, proj_k, proj_v, proj_o;
  std::size_t heads = 1;
  static MultiheadAttention create(ParamStore& store, const std::string& prefix,
                                   std::size_t dim, std::size_t heads, Rng& rng);
  Tensor operator()(const Tensor& q_in, const Tensor& kv_in,
                    const std::vector<double>* mask = nullptr) const;
};

// Pre-LN transformer block: self-attention followed by MLP, both residual.
struct TransformerBlock {
  LayerNorm ln1, ln2;
  MultiheadAttention attn;
  Mlp mlp;
  static TransformerBlock create(ParamStore& store, const std::string& prefix,
                                 std::size_t dim, std::size_t heads, Rng& rng);
  Tensor operator()(const Tensor& x) const;
};

// Cross-attention block: tokens attend to a separate condition sequence.
struct CrossAttentionBlock {
  LayerNorm ln_q, ln_kv, ln_mlp;
  MultiheadAttention attn;
  Mlp mlp;
  static CrossAttentionBlock create(ParamStore& store, const std::string& prefix,
                                    std::size_t dim, std::size_t heads, Rng& rng);
  Tensor operator()(const Tensor& x, const Tensor& cond) const;
};

// DiT block with adaptive layer-norm modulation from a conditioning vector
// plus cross-attention to condition tokens. The modulation projection emits
// shift/scale/gate triples for each of the three sublayers.
struct DiTBlock {
  MultiheadAttention self_attn, cross_attn;
  Mlp mlp;
  LayerNorm ln_kv;
  Linear mod;  // [1, dim] -> [1, 9*dim]
  std::size_t dim = 0;
  static DiTBlock create(ParamStore& store, const std::string& prefix,
                         std::size_t dim, std::size_t heads, Rng& rng);
  Tensor operator()(const Tensor& x, const Tensor& cond_vec,
                    const Tensor& cond_tokens,
                    const std::vector<double>* self_mask = nullptr) const;
};

// Sinusoidal embedding of a scalar timestep, shape [1, dim].
Tensor timestep_embedding(double t, std::size_t dim);

class AdamW {
 public:
  struct Config {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.01;
  };

  AdamW(std::vector<std::pair<std::string, Tensor>> params, Config config);
  explicit AdamW(const ParamStore& store, Config config);

  // One decoupled-weight-decay update from the accumulated gradients.
  // Throws (and leaves parameters untouched) if any gradient is not finite.
  void step();
  void zero_grad();
  std::size_t step_count() const { return step_count_; }
  Config& config() { return config_; }

 private:
  std::vector<std::pair<std::string, Tensor>> params_;
  std::vector<std::vector<double>> m_, v_;
  Config config_;
  std::size_t step_count_ = 0;
};

}  // namespace unipart::nn
