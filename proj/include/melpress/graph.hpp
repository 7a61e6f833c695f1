#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "melpress/rng.hpp"
#include "melpress/tensor.hpp"

namespace melpress {

class Node;
using NodePtr = std::shared_ptr<Node>;

// One vertex of a dynamic reverse-mode graph. Interior nodes are created per
// forward pass and freed when the last reference drops; parameter leaves
// persist across steps and accumulate gradients until zeroed.
class Node {
 public:
  Tensor value;
  Tensor grad;
  bool grad_valid = false;
  bool requires_grad = false;
  const char* op_name = "leaf";
  std::vector<NodePtr> inputs;
  std::function<void()> backprop;

  void accumulate_grad(const Tensor& g);
  void add_to_grad(int64_t index, double g);
  void ensure_grad();
  void zero_grad();
};

NodePtr make_leaf(Tensor v);   // requires_grad = true
NodePtr make_const(Tensor v);  // requires_grad = false

// c = a[m x k] * b[k x n]
NodePtr matmul(const NodePtr& a, const NodePtr& b);
// c = a[m x k] * b[n x k]^T
NodePtr matmul_nt(const NodePtr& a, const NodePtr& b);
// y = x * w^T + b, with w stored [out x in] and b broadcast over rows.
NodePtr linear(const NodePtr& x, const NodePtr& w, const NodePtr& b);

NodePtr add(const NodePtr& a, const NodePtr& b);
NodePtr add_rowvec(const NodePtr& a, const NodePtr& row);
NodePtr add_const(const NodePtr& a, const Tensor& c);
NodePtr scale(const NodePtr& a, double s);

NodePtr layer_norm(const NodePtr& x, const NodePtr& gain, const NodePtr& bias, double eps = 1e-5);
NodePtr softmax_rows(const NodePtr& x);
NodePtr gelu(const NodePtr& x);
NodePtr relu(const NodePtr& x);

// Training: zero with probability p, scale survivors by 1/(1-p). Inference or
// p = 0: identity (the input node is returned unchanged).
NodePtr dropout(const NodePtr& x, double p, Rng& rng, bool training);

NodePtr slice_cols(const NodePtr& x, int64_t start, int64_t count);
NodePtr concat_cols(const std::vector<NodePtr>& xs);

// Rows of x where row_mask is nonzero are replaced by the (1 x d) embedding.
// Gradient w.r.t. the embedding is the sum over replaced rows.
NodePtr replace_masked_rows(const NodePtr& x, const NodePtr& embedding,
                            const std::vector<uint8_t>& row_mask);

// Mean cross-entropy over the rows selected by frame_mask. Gradients at
// unselected rows are exactly zero.
NodePtr masked_cross_entropy(const NodePtr& logits, const std::vector<int32_t>& labels,
                             const std::vector<uint8_t>& frame_mask);

// Mean over rows of tau^2 * KL(softmax(t/tau) || softmax(s/tau)). The teacher
// side is a constant; gradient flows to the student only.
NodePtr kl_distill(const Tensor& teacher_logits, const NodePtr& student_logits, double temperature);

// sum_l softmax(w)_l * taps[l], with constant taps and learnable raw weights.
NodePtr layer_weighted_sum(const std::vector<Tensor>& taps, const NodePtr& raw_weights);

NodePtr mean_rows(const NodePtr& x);
NodePtr sum_all(const NodePtr& x);

// Reverse pass from a scalar loss. Accumulates into the grad of every
// requires_grad node reachable from the loss.
void backward(const NodePtr& loss);

}  // namespace melpress
