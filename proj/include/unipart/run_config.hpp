#pragma once

#include <cstdint>
#include <string>

#include "unipart/eval.hpp"
#include "unipart/flow.hpp"
#include "unipart/latent_seg.hpp"
#include "unipart/part_dit.hpp"
#include "unipart/procgen.hpp"
#include "unipart/vae.hpp"
#include "unipart/whole_dit.hpp"

namespace unipart {

// Per-stage run-scale knobs. Model architecture lives in the module configs.
struct DatasetStage {
  procgen::DatasetConfig config;
  std::size_t train_objects = 2048;
  std::size_t test_objects = 128;
};

struct VaeStage {
  vae::VaeConfig config;
  std::size_t steps = 20000;
  std::size_t geometry_steps = 5000;  // label channel zeroed, no seg loss
  double lr = 1e-4;
  std::size_t encode_points = 512;    // per-step encoder input subsample
  std::size_t queries_per_step = 256;
  std::size_t log_every = 200;
};

struct PosStage {
  std::size_t steps = 3000;
  double lr = 1e-3;
  std::size_t log_every = 200;
};

struct WholeStage {
  wholedit::WholeDitConfig config;
  std::size_t steps = 8000;
  double lr = 1e-4;
  std::size_t log_every = 200;
};

struct PartStage {
  partdit::PartDitConfig config;
  std::size_t steps = 6000;
  double lr = 1e-4;
  std::size_t log_every = 200;
  std::size_t part_encode_points = 512;  // surface samples per part target
};

// Full pipeline configuration. Serializes to/from a single JSON file; every
// stage writes its resolved copy next to its outputs.
struct RunConfig {
  std::uint64_t seed = 0;
  DatasetStage dataset;
  VaeStage vae;
  PosStage pos;
  WholeStage whole;
  PartStage part;
  flow::SamplerConfig sampler;
  latentseg::LatentSegConfig seg;
  eval::EvalConfig eval;
  int mc_resolution = 48;  // marching-cubes grid for generated meshes
};

// Parses a JSON config; missing keys keep their defaults, unknown keys are
// errors. Throws std::runtime_error with the offending path on bad input.
RunConfig load_run_config(const std::string& path);
void save_run_config(const RunConfig& config, const std::string& path);

std::string run_config_to_json(const RunConfig& config);
RunConfig run_config_from_json(const std::string& text);

// Appends one entry to `<run_dir>/manifest.json` (a JSON array; created on
// first use, existing entries never modified).
void append_manifest(const std::string& run_dir, const std::string& entry_json);

}  // namespace unipart
