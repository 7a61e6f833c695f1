#pragma once

#include <vector>

#include "melpress/corpus.hpp"
#include "melpress/encoder.hpp"

namespace melpress {

class MetricsSink;

struct DistillConfig {
  enum class Init { random, teacher_first_k };

  int student_layers = 2;
  Init init = Init::teacher_first_k;
  double temperature = 1.0;
  // The teacher always sees masked input; this flag feeds the student the
  // same mask instead of the clean frames. Defaulting to masked keeps a
  // full-depth teacher-initialized student an exact fixed point.
  bool mask_student_input = true;
  double student_dropout = 0.0;
  int steps = 2000;
  int batch = 4;
  AdamHyper adam{1e-4, 0.9, 0.999, 1e-8};
  int log_every = 25;
  void validate() const;
};

// Same width, vocabulary, and input plumbing as the teacher; only depth
// changes. teacher_first_k copies the input projection, mask embedding,
// first k blocks, and classifier, masks and pruned shapes included; random
// draws everything fresh. Optimizer state starts at zero either way.
EncoderWeights build_student(const EncoderWeights& teacher, const DistillConfig& cfg, Rng& rng);

// Mean over frames of tau^2 * KL(softmax(t/tau) || softmax(s/tau)). The
// teacher side is a constant; the gradient reaches the student only.
NodePtr kd_loss(const Tensor& teacher_logits, const NodePtr& student_logits, double tau);

struct DistillResult {
  EncoderWeights student;
  std::vector<CurvePoint> curve;  // batch KD loss at logged steps
  double final_loss = 0.0;
  int steps_done = 0;
};

// Trains a student against frozen teacher soft labels. The teacher runs in
// inference mode on freshly masked input each draw; cluster labels are not
// needed. A NumericError mid-step aborts with the step in the message.
DistillResult distill(const EncoderWeights& teacher, const DistillConfig& cfg,
                      const std::vector<Utterance>& corpus, Rng& rng,
                      MetricsSink* sink = nullptr);

}  // namespace melpress
