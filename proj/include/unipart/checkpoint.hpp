#pragma once

#include <string>

#include "unipart/nn.hpp"

namespace unipart::nn {

// Checkpoint file layout (little-endian):
//   bytes 0..7   magic "UPCKPT01"
//   u64          manifest byte length
//   manifest     JSON {"dtype":"f64","tensors":[{"name":...,"shape":[...]},...]}
//   payload      for each manifest entry, numel raw float64 values in order
void save_checkpoint(const ParamStore& store, const std::string& path);

// Fills an already-constructed store by name. Missing names, extra names, or
// shape mismatches are errors.
void load_checkpoint(ParamStore& store, const std::string& path);

// FNV-1a content hash of an arbitrary file, as a hex string.
std::string file_checksum(const std::string& path);

}  // namespace unipart::nn
