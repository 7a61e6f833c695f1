#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "melpress/corpus.hpp"
#include "melpress/graph.hpp"
#include "melpress/param.hpp"
#include "melpress/rng.hpp"

namespace melpress {

class MetricsSink;

struct MaskingSpec {
  double mask_prob = 0.07;  // per-frame span-start probability
  int span_len = 10;
  void validate() const;
};

struct EncoderConfig {
  int layers = 12;
  int d_model = 96;
  int heads = 4;
  int ffn_dim = 384;
  int input_dim = 20;
  int vocab = 32;
  double dropout = 0.1;
  MaskingSpec masking;
  int frame_period_ms = 10;

  int head_dim() const { return d_model / heads; }
  int frames_per_second() const { return 1000 / frame_period_ms; }
  void validate() const;
};

// One Transformer block's parameters. After structural pruning the Q/K/V
// matrices keep fewer rows and W_O fewer columns (heads), or FC1 fewer rows
// and FC2 fewer columns (FFN units); live counts are read off the shapes.
struct LayerWeights {
  Parameter ln1_g, ln1_b;
  Parameter wq, bq, wk, bk, wv, bv, wo, bo;
  Parameter ln2_g, ln2_b;
  Parameter w1, b1, w2, b2;

  int live_heads(int head_dim) const { return static_cast<int>(wq.value().rows()) / head_dim; }
  int live_ffn() const { return static_cast<int>(w1.value().rows()); }
};

struct EncoderWeights {
  EncoderConfig config;  // original geometry; live dims come from the tensors
  Parameter in_proj_w, in_proj_b;
  Parameter mask_emb;  // 1 x d
  Parameter cls_w, cls_b;
  std::vector<LayerWeights> layers;

  int live_heads(int layer) const { return layers[static_cast<size_t>(layer)].live_heads(config.head_dim()); }
  int live_ffn(int layer) const { return layers[static_cast<size_t>(layer)].live_ffn(); }

  std::vector<Parameter*> all_params();
  std::vector<const Parameter*> all_params() const;
  // The weight-pruning scope: Q/K/V/O and FC1/FC2 weights and biases of every
  // block. Layer norms, the input projection, the classifier, and the mask
  // embedding are not prunable.
  std::vector<Parameter*> prunable_params();
  std::vector<const Parameter*> prunable_params() const;
  void validate() const;
};

EncoderWeights init_encoder(const EncoderConfig& cfg, Rng& rng);

// Sinusoidal absolute positions, T x d.
Tensor positional_encoding(int64_t t_len, int64_t d);

// Span masking: each frame starts a span of span_len frames with probability
// mask_prob; the mask is the union of spans.
std::vector<uint8_t> sample_mask(int64_t t_len, const MaskingSpec& spec, Rng& rng);

// sample_mask, retried with the advanced rng state until at least one frame
// is masked.
std::vector<uint8_t> sample_nonempty_mask(int64_t t_len, const MaskingSpec& spec, Rng& rng);

struct EncodeResult {
  std::vector<NodePtr> taps;  // h_0 .. h_k, each T x d
  NodePtr logits;             // T x K; null for prefix encodes
  // Per layer, per live head: the attention-weighted value output V_k, T x d_h.
  std::vector<std::vector<NodePtr>> head_values;
};

// Forward pass. frame_mask may be empty (no replacement); training enables
// dropout and requires rng.
EncodeResult encode(const Tensor& features, const EncoderWeights& w,
                    const std::vector<uint8_t>& frame_mask, bool training, Rng* rng);

// First k blocks only; inference mode, no masking, no classifier.
EncodeResult encode_prefix(const Tensor& features, const EncoderWeights& w, int k);

NodePtr masked_ce_loss(const NodePtr& logits, const std::vector<int32_t>& cluster_labels,
                       const std::vector<uint8_t>& frame_mask);

struct PretrainConfig {
  int steps = 3000;
  int batch = 8;
  AdamHyper adam{1e-4, 0.9, 0.999, 1e-8};
  int eval_every = 250;
  int log_every = 25;
  void validate() const;
};

struct CurvePoint {
  int step;
  double value;
};

struct PretrainResult {
  std::vector<CurvePoint> train_curve;
  std::vector<CurvePoint> dev_curve;
  double final_dev_loss = 0.0;
  int steps_done = 0;
};

// Draws utterances in epoch-shuffled order.
class BatchSampler {
 public:
  BatchSampler(const std::vector<Utterance>& corpus, Rng& rng);
  const Utterance& next();

 private:
  const std::vector<Utterance>& corpus_;
  Rng& rng_;
  std::vector<size_t> order_;
  size_t pos_ = 0;
};

// One optimizer step over a batch of utterances: fresh span masks, masked
// cross-entropy, gradient accumulation, Adam. Returns the mean batch loss.
double training_step(EncoderWeights& w, BatchSampler& sampler, int batch, Rng& rng,
                     const AdamHyper& adam);

// Mean masked cross-entropy over a fixed evaluation set, inference mode.
double eval_loss(const EncoderWeights& w,
                 const std::vector<std::pair<const Utterance*, std::vector<uint8_t>>>& eval_set);

// Builds a deterministic eval set: one fixed mask per utterance.
std::vector<std::pair<const Utterance*, std::vector<uint8_t>>> make_eval_set(
    const std::vector<Utterance>& utts, const MaskingSpec& spec, uint64_t seed);

using CheckpointFn = std::function<void(int step, const EncoderWeights&)>;

// Masked-prediction pre-training. Divergence (a NumericError mid-step)
// restores the last evaluated snapshot into w and rethrows. Deterministic
// given rng and corpus.
PretrainResult pretrain(EncoderWeights& w, const std::vector<Utterance>& train,
                        const std::vector<Utterance>& dev, const PretrainConfig& cfg, Rng& rng,
                        MetricsSink* sink = nullptr, const CheckpointFn& on_checkpoint = {});

}  // namespace melpress
