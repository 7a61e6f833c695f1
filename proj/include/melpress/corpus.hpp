#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "melpress/rng.hpp"
#include "melpress/tensor.hpp"

namespace melpress {

// One utterance of frame features. Labels are optional: generated corpora
// carry both probe labels, ingested feature files may carry neither.
// cluster_labels is empty until a codebook assignment fills it.
struct Utterance {
  Tensor features;  // T x D
  std::vector<int32_t> frame_states;
  int32_t seq_class = -1;
  bool has_frame_states = false;
  bool has_seq_class = false;
  std::vector<int32_t> cluster_labels;
  int frame_period_ms = 10;

  int64_t frames() const { return features.rows(); }
  int64_t dim() const { return features.cols(); }
  double speech_seconds() const {
    return static_cast<double>(frames()) * static_cast<double>(frame_period_ms) / 1000.0;
  }
  void validate() const;
};

struct GeneratorSpec {
  int n_states = 8;
  int n_seq_classes = 4;
  int dim = 20;
  double stickiness = 0.9;  // self-transition probability
  double noise_scale = 0.1;
  int min_frames = 80;
  int max_frames = 120;
  uint64_t seed = 1;

  void validate() const;
};

// Sticky Markov chain over states; the emission mean depends on the
// (state, seq_class) pair. Features are quantized to float32 values so an
// in-memory corpus is bit-identical to one round-tripped through files.
std::vector<Utterance> generate(const GeneratorSpec& spec, int n_utts);

// 2-frame splicing: halves the frame count, doubles the feature dim, doubles
// the frame period. Labels are taken from the even-indexed source frame.
Utterance splice2(const Utterance& u);

// Inverse of splice2 on the even-length prefix. Frame labels are duplicated
// across the two recovered frames.
Utterance unsplice2(const Utterance& u);

// Feature file I/O ("MHFT" format). Little-endian only; a byte-swapped
// version field is called out as a big-endian file.
void save_features(const std::string& path, const Utterance& u);
Utterance load_features(const std::string& path);

// Manifest: one feature-file path per line, resolved against the manifest's
// directory when relative.
std::vector<Utterance> load_manifest(const std::string& path);

// Writes utt-NNNNN.mhft files plus manifest.txt into dir; returns the
// manifest path.
std::string save_corpus(const std::string& dir, const std::vector<Utterance>& utts);

struct Codebook {
  Tensor centroids;  // K x D, in standardized coordinates
  Tensor mean;       // D
  Tensor std;        // D
  int64_t clusters() const { return centroids.rows(); }
  int64_t dim() const { return centroids.cols(); }
  // Centroids mapped back to feature coordinates.
  Tensor centroids_raw() const;
  void validate() const;
};

// Lloyd's algorithm with k-means++ seeding on standardized frames. Empty
// clusters are re-seeded to the point farthest from its current centroid.
// distortion_trace, when given, receives the mean squared distance after
// each iteration.
Codebook kmeans_fit(const Tensor& frames, int k, int iters, uint64_t seed,
                    std::vector<double>* distortion_trace = nullptr);

// Nearest centroid per frame, squared Euclidean in standardized coordinates,
// ties toward the lowest id.
std::vector<int32_t> assign(const Codebook& cb, const Utterance& u);

// Assigns cluster_labels to every utterance in place.
void assign_corpus(const Codebook& cb, std::vector<Utterance>& utts);

// All frames of a corpus stacked into one N x D matrix.
Tensor stack_frames(const std::vector<Utterance>& utts);

void save_codebook(const std::string& path, const Codebook& cb);
Codebook load_codebook(const std::string& path);

}  // namespace melpress
