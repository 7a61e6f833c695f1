#pragma once

#include <optional>
#include <string>
#include <vector>

#include "melpress/graph.hpp"
#include "melpress/tensor.hpp"

namespace melpress {

// A named leaf with Adam state and an optional binary mask. Copying a
// Parameter deep-copies the leaf node, so copies never share gradients.
class Parameter {
 public:
  Parameter() = default;
  Parameter(std::string name, Tensor v);
  Parameter(const Parameter& other);
  Parameter& operator=(const Parameter& other);
  Parameter(Parameter&&) = default;
  Parameter& operator=(Parameter&&) = default;

  const std::string& name() const { return name_; }
  const NodePtr& node() const { return node_; }
  Tensor& value() { return node_->value; }
  const Tensor& value() const { return node_->value; }
  bool has_grad() const { return node_ && node_->grad_valid; }
  Tensor& grad();
  void zero_grad() { node_->zero_grad(); }

  // Entries must be exactly 0 or 1. Zeroed entries are cleared immediately in
  // the value, the gradient, and the Adam moments, and stay zero as long as
  // the mask is in place.
  void set_mask(Tensor mask);
  const std::optional<Tensor>& mask() const { return mask_; }
  void clear_mask() { mask_.reset(); }
  void apply_mask();
  int64_t nonzero_mask_entries() const;

  Tensor adam_m, adam_v;
  int64_t adam_steps = 0;

 private:
  std::string name_;
  NodePtr node_;
  std::optional<Tensor> mask_;
};

struct AdamHyper {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  void validate() const;
};

// Reverse pass plus mask projection on the parameter gradients.
void backward(const NodePtr& loss, const std::vector<Parameter*>& params);

// One bias-corrected Adam update per parameter, then mask projection. Skips
// parameters with no accumulated gradient. Does not zero gradients.
void adam_step(const std::vector<Parameter*>& params, const AdamHyper& h);

void zero_grads(const std::vector<Parameter*>& params);

}  // namespace melpress
