#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "melpress/corpus.hpp"
#include "melpress/encoder.hpp"

namespace melpress {

class MetricsSink;

// Frozen-upstream downstream evaluation: a learned softmax-weighted sum of
// the layer taps feeds a linear head. frame_state classifies every frame;
// seq_class mean-pools and classifies the whole utterance.
enum class ProbeTask { frame_state, seq_class };

struct ProbeConfig {
  int prefix_layers = -1;  // -1 uses every block; k probes taps h_0..h_k
  int steps = 300;
  int batch = 8;
  AdamHyper adam{1e-3, 0.9, 0.999, 1e-8};
  int eval_every = 50;
  uint64_t split_seed = 17;
  void validate() const;
};

// 80/10/10 by utterance, seeded, order-shuffled. Val and test get at least
// one utterance each; needs n >= 3.
struct ProbeSplit {
  std::vector<size_t> train, val, test;
};
ProbeSplit probe_split(size_t n, uint64_t seed);

std::vector<double> effective_weights(const std::vector<double>& raw);  // softmax

// sum_l softmax(raw)_l * taps[l]. Taps are constants; the gradient reaches
// the raw weights only.
NodePtr weighted_features(const std::vector<Tensor>& taps, const NodePtr& raw_weights);

struct ProbeResult {
  ProbeTask task = ProbeTask::frame_state;
  double accuracy = 0.0;      // test split, at the best-validation snapshot
  double val_accuracy = 0.0;  // best validation accuracy seen
  std::vector<double> layer_weights;  // softmax snapshot at the reported step
  std::string upstream_hash;
  int steps_done = 0;
};

// Trains the weighting and head jointly; the upstream stays frozen (content
// hash checked before and after). Taps are recomputed per draw rather than
// cached, trading compute for memory. upstream_hash is carried into the
// result untouched so callers can record the checkpoint identity.
ProbeResult train_probe(const EncoderWeights& upstream, const std::vector<Utterance>& corpus,
                        ProbeTask task, const ProbeConfig& cfg, Rng& rng,
                        const std::string& upstream_hash = {}, MetricsSink* sink = nullptr);

}  // namespace melpress
