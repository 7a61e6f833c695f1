#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "melpress/encoder.hpp"

namespace melpress {

// Parameter counts. Transformer-block entries are reported apart from the
// input projection, mask embedding, and classifier; "nonzero" excludes
// mask-zeroed entries only, incidental zero values still count.
struct ParamCounts {
  int64_t block_total = 0;
  int64_t block_nonzero = 0;
  int64_t other_total = 0;
  int64_t other_nonzero = 0;

  int64_t total() const { return block_total + other_total; }
  int64_t nonzero() const { return block_nonzero + other_nonzero; }
};

ParamCounts count_params(const EncoderWeights& w);

// Analytic multiply-accumulate counts for one second of speech. Multiplies
// inside matmuls only; softmax, layer norms, biases, and activations are
// excluded. The classifier term is reported but left out of total() by
// default since downstream use taps the hidden states.
struct MacsBreakdown {
  int64_t input_proj = 0;
  int64_t attn_proj = 0;
  int64_t attn_quad = 0;
  int64_t ffn = 0;
  int64_t classifier = 0;

  int64_t total(bool with_classifier = false) const {
    return input_proj + attn_proj + attn_quad + ffn + (with_classifier ? classifier : 0);
  }
};

// prefix_layers < 0 means all layers. frame_period_ms must be 10 or 20.
MacsBreakdown macs_per_second(const EncoderWeights& w, int frame_period_ms,
                              int prefix_layers = -1);

// Dense execution ignores weight masks; this figure counts only multiplies by
// mask-surviving entries, the paper-style "theoretical" number for weight
// pruning. Structural terms (attention quadratic part) are unaffected.
int64_t theoretical_macs_per_second(const EncoderWeights& w, int frame_period_ms);

// Density values shared with the compress module: remaining / total for each
// prunable unit kind, against the original geometry in w.config.
double weight_density_value(const EncoderWeights& w);
double head_density_value(const EncoderWeights& w);
double ffn_density_value(const EncoderWeights& w);

struct RtfStats {
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  std::vector<double> samples;

  double iqr() const { return q75 - q25; }
};

// Wall-clock inference time over speech seconds, single-threaded, one warm-up
// pass excluded, one sample per repeat. prefix < 0 runs the full stack; the
// classifier is never part of the timed path. repeats must be >= 3.
RtfStats measure_rtf(const EncoderWeights& w, const std::vector<Utterance>& utts, int repeats,
                     int prefix = -1);

struct CompressionReport {
  ParamCounts params;
  MacsBreakdown macs;
  int64_t theoretical_macs = 0;
  double weight_density = 1.0;
  double head_density = 1.0;
  double ffn_density = 1.0;
  double rtf_median = -1.0;  // negative when not measured
  double rtf_iqr = 0.0;

  nlohmann::json to_json(const EncoderWeights& w) const;
};

CompressionReport build_report(const EncoderWeights& w, const RtfStats* rtf = nullptr);

}  // namespace melpress
