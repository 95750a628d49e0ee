#pragma once

#include <cstdint>
#include <functional>

#include "unipart/rng.hpp"
#include "unipart/tensor.hpp"

namespace unipart::flow {

using tad::Tensor;

struct SamplerConfig {
  int steps = 50;
  double cfg_scale = 5.0;
  std::uint64_t seed = 0;
};

// Z_t = (1-t) Z0 + t eps
Tensor interpolate(const Tensor& z0, const Tensor& noise, double t);

// Mean squared error against the rectified-flow target (eps - Z0).
Tensor cfm_loss(const Tensor& v_pred, const Tensor& z0, const Tensor& noise);

// v = v_uncond + scale * (v_cond - v_uncond)
Tensor cfg_combine(const Tensor& v_uncond, const Tensor& v_cond, double scale);

using VelocityFn = std::function<Tensor(const Tensor& z_t, double t)>;

// Euler integration of the velocity field from t=1 down to t=0, starting at
// the given noise. Aborts with the step index if any state entry goes
// non-finite.
Tensor sample_from(const VelocityFn& velocity, const Tensor& init_noise,
                   int steps);

// Same, drawing the initial noise N(0,I) of the given shape from config.seed.
Tensor sample(const VelocityFn& velocity, tad::Shape shape,
              const SamplerConfig& config);

Tensor gaussian_noise(tad::Shape shape, Rng& rng);

}  // namespace unipart::flow
