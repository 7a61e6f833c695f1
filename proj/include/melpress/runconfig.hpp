#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "melpress/compress.hpp"
#include "melpress/corpus.hpp"
#include "melpress/distill.hpp"
#include "melpress/encoder.hpp"
#include "melpress/probe.hpp"

namespace melpress {

struct CorpusSection {
  GeneratorSpec gen;    // used when manifest is empty
  int n_utts = 60;
  int dev_utts = 6;     // held-out tail of the corpus
  std::string manifest; // external 10 ms feature manifest; splicing is applied on load
  int kmeans_k = 32;
  int kmeans_iters = 20;
};

struct ProbeSection {
  ProbeConfig config;
  std::vector<std::string> tasks = {"frame_state", "seq_class"};
};

struct ProfileSection {
  int rtf_repeats = 7;
  int rtf_utts = 4;
  int prefix_layers = -1;
};

// The full experiment configuration. from_json starts from the defaults and
// overlays the given document, rejecting unknown keys at every level, so a
// partial file is valid input while the echoed copy always spells out every
// field.
struct RunConfig {
  uint64_t seed = 1;
  std::string run_dir = "run";
  std::string checkpoint;  // input checkpoint; empty = <run_dir>/checkpoints/stage-0.mhck
  CorpusSection corpus;
  EncoderConfig encoder;
  PretrainConfig pretrain;
  CompressConfig compress;
  DistillConfig distill;
  ProbeSection probe;
  ProfileSection profile;

  void validate() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

RunConfig load_run_config(const std::string& path);

// Relative run directories are rooted under $MELPRESS_RUN_ROOT when set.
std::string resolve_run_dir(const std::string& run_dir);

const char* technique_name(Technique t);

}  // namespace melpress
