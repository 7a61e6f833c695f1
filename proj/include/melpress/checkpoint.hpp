#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "melpress/encoder.hpp"

namespace melpress {

// MHCK checkpoint: magic, version, a JSON header carrying the config and a
// string metadata map, the named weight tensors with any ".mask" companions,
// and an FNV-1a trailer. The checksum doubles as the checkpoint identity
// hash referenced by distillation ("student_of") and probing. Adam moments
// are deliberately not stored; training resumes with fresh optimizer state.

nlohmann::json encoder_config_to_json(const EncoderConfig& cfg);
// Strict: every field required, unknown keys rejected.
EncoderConfig encoder_config_from_json(const nlohmann::json& j);

// Returns the checkpoint hash (16 hex digits).
std::string save_checkpoint(const std::string& path, const EncoderWeights& w,
                            const std::map<std::string, std::string>& metadata = {});

struct LoadedCheckpoint {
  EncoderWeights weights;
  std::map<std::string, std::string> metadata;
  std::string hash;
};

LoadedCheckpoint load_checkpoint(const std::string& path);

// Verifies the trailer and returns the hash without rebuilding the weights.
std::string checkpoint_file_hash(const std::string& path);

}  // namespace melpress
