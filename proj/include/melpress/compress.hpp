#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "melpress/encoder.hpp"
#include "melpress/profile.hpp"

namespace melpress {

class MetricsSink;

// Remaining prunable units over total, 1.0 = unpruned.
struct Density {
  double value = 1.0;
};

enum class UnitKind { weights, heads, ffn_dims };

Density density_of(const EncoderWeights& w, UnitKind kind);

// Densities carried in integer permille so the 2.5 and 0.5 point steps stay
// exact. One stage: prune `step_pm` points at a time while above `floor_pm`.
struct ScheduleStage {
  int step_pm;
  int floor_pm;
};

struct WeightPruneSchedule {
  std::vector<ScheduleStage> stages;

  static WeightPruneSchedule paper_default();
  void validate() const;
  int stop_pm() const { return stages.back().floor_pm; }
  // Next target density from `current_pm`, or nullopt at/below the stop.
  std::optional<int> next_target_pm(int current_pm) const;
  // The full density sequence starting at 1000.
  std::vector<int> trace_pm() const;
};

// EMA-loss plateau detector. fire requires window+1 recorded EMA values whose
// endpoints differ by at most tolerance; the history resets after each fire.
struct TriggerState {
  double decay = 0.9998;
  int window = 15000;
  double tolerance = 0.001;

  double ema = 0.0;
  bool initialized = false;
  std::deque<double> ring;
};

bool trigger_update(TriggerState& st, double loss);

struct PruneStepResult {
  int target_pm = 1000;
  Density achieved;
  int64_t newly_masked = 0;
};

// One schedule step of global magnitude pruning over the prunable set.
// Already-masked entries stay masked; ties break by (|w|, parameter order,
// flat index). Throws ContractError at the stop density.
PruneStepResult weight_prune_step(EncoderWeights& w, const WeightPruneSchedule& schedule,
                                  int current_pm);

struct HeadScore {
  int layer = 0;
  int head = 0;
  double score = 0.0;
};

// L1 of the head's W_Q/W_K/W_V rows, their bias slices, and its W_O columns.
std::vector<HeadScore> head_scores_weight(const EncoderWeights& w);

// Eq. 1 scores: sum over utterances of |V_k(x)^T dL/dV_k(x)|_1 with the
// masked-prediction loss, then L2-normalized within each layer. Fresh span
// masks are drawn from rng per utterance.
std::vector<HeadScore> head_scores_gradient(const EncoderWeights& w,
                                            const std::vector<Utterance>& data, Rng& rng);

struct HeadPruneSpec {
  enum class Mode { per_layer_fixed, global };
  Mode mode = Mode::per_layer_fixed;
  int count = 1;  // heads per layer, or total heads for global
};

// Physically removes the lowest-score heads (Q/K/V rows, O columns). Refuses
// any request that would leave a layer with no heads.
void prune_heads(EncoderWeights& w, const std::vector<HeadScore>& scores,
                 const HeadPruneSpec& spec);

// Per layer, score_j = L1(FC1 row j + bias_j) + L1(FC2 column j).
std::vector<std::vector<double>> ffn_unit_scores(const EncoderWeights& w);

// Physically removes the n_dims lowest-score hidden units in every layer.
void prune_ffn(EncoderWeights& w, int n_dims);

// Zeroing counterparts used by the mask-vs-remove equivalence checks: a head
// is dead once its value projection is zero, an FFN unit once FC2 stops
// consuming it.
void zero_head(EncoderWeights& w, int layer, int head);
void zero_ffn_unit(EncoderWeights& w, int layer, int unit);

enum class Technique { weights, heads, ffn_dims };

struct CompressConfig {
  Technique technique = Technique::weights;
  WeightPruneSchedule schedule = WeightPruneSchedule::paper_default();
  double trigger_decay = 0.9998;
  int trigger_window = 15000;
  double trigger_tolerance = 0.001;
  int max_retrain_steps = 20000;  // per weight-pruning stage, trigger cap
  int retrain_steps = 2000;       // fixed count for structured stages
  HeadPruneSpec head_spec;
  bool gradient_head_scores = false;
  double score_data_fraction = 0.25;  // training subset for Eq. 1 scores
  int ffn_dims_per_stage = 0;         // 0 = f / 24
  int max_stages = -1;                // -1 = run to the schedule or structure limit
  AdamHyper adam{1e-5, 0.9, 0.999, 1e-8};
  int batch = 4;
  int eval_every = 500;

  void validate() const;
};

struct StageRecord {
  int stage = 0;
  Technique technique = Technique::weights;
  double target_density = 1.0;  // nominal for weights, live fraction otherwise
  Density density;
  double dev_loss = 0.0;
  int retrain_steps_done = 0;
  bool trigger_fired = false;
  CompressionReport report;
};

using StageFn = std::function<void(int stage, const EncoderWeights&, const StageRecord&)>;

struct CompressResult {
  std::vector<StageRecord> stages;
  double baseline_dev_loss = 0.0;
};

// The prune/retrain loop run to the technique's limit. A NumericError
// during retraining restores the last completed stage and rethrows.
CompressResult iterative_compress(EncoderWeights& w, const std::vector<Utterance>& train,
                                  const std::vector<Utterance>& dev, const CompressConfig& cfg,
                                  Rng& rng, MetricsSink* sink = nullptr,
                                  const StageFn& on_stage = {});

}  // namespace melpress
