#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dessl/error.hpp"
#include "dessl/matrix.hpp"

namespace dessl::ndgrad {

class Node;
using NodePtr = std::shared_ptr<Node>;
using Shape = std::vector<std::size_t>;

// One vertex of a define-by-run graph: dense 64-bit values plus a record of
// the producing primitive and its parents. Graphs are rebuilt per forward
// pass and confined to one thread.
class Node {
 public:
  static NodePtr leaf(Shape shape, std::vector<double> values, bool requires_grad = false);
  static NodePtr leaf(const Matrix& m, bool requires_grad = false);
  static NodePtr scalar(double v, bool requires_grad = false);

  const Shape& shape() const { return shape_; }
  std::size_t numel() const { return values_.size(); }
  bool is_scalar() const { return values_.size() == 1; }
  // 2-d views; rank-1 nodes are n x 1, scalars 1 x 1
  std::size_t rows() const { return shape_.empty() ? 1 : shape_[0]; }
  std::size_t cols() const { return shape_.size() < 2 ? 1 : shape_[1]; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  double value() const {
    if (!is_scalar()) throw UsageError("value(): node is not scalar");
    return values_[0];
  }

  bool requires_grad() const { return requires_grad_; }
  bool is_leaf() const { return parents_.empty(); }
  const char* op_name() const { return op_name_; }
  const std::vector<NodePtr>& parents() const { return parents_; }

  // Lazily allocated, zero-initialised, same shape as values.
  std::vector<double>& grad() {
    if (grad_.empty()) grad_.assign(values_.size(), 0.0);
    return grad_;
  }
  bool has_grad() const { return !grad_.empty(); }
  void zero_grad() { grad_.assign(values_.size(), 0.0); }

 private:
  Node() = default;

  Shape shape_;
  std::vector<double> values_;
  std::vector<double> grad_;
  bool requires_grad_ = false;
  const char* op_name_ = "leaf";
  std::vector<NodePtr> parents_;
  // Accumulates d(root)/d(parent) into parents' grads given this->grad_.
  std::function<void(Node&)> backward_;

  friend NodePtr make_op(const char* name, Shape shape, std::vector<double> values,
                         std::vector<NodePtr> parents, std::function<void(Node&)> backward);
  friend void backward(const NodePtr& root);
};

// --- primitive set ---------------------------------------------------------

// x[n x d] * w[d x k] + b[k] broadcast over rows
NodePtr affine(const NodePtr& x, const NodePtr& w, const NodePtr& b);
NodePtr relu(const NodePtr& x);
NodePtr log_softmax(const NodePtr& x);  // over last axis
NodePtr exponent(const NodePtr& x);
NodePtr add(const NodePtr& a, const NodePtr& b);
NodePtr sub(const NodePtr& a, const NodePtr& b);
NodePtr mul(const NodePtr& a, const NodePtr& b);
NodePtr scalar_mul(double c, const NodePtr& x);
NodePtr sum(const NodePtr& x);   // -> scalar
NodePtr mean(const NodePtr& x);  // -> scalar
NodePtr row_sum(const NodePtr& x);  // n x c -> n
// out[i] = x[i, idx[i]]
NodePtr gather(const NodePtr& x, const std::vector<std::size_t>& idx);
// value copy with no parents; exact zero contribution to upstream gradients
NodePtr detach(const NodePtr& x);
NodePtr sqdiff(const NodePtr& a, const NodePtr& b);  // (a-b)^2 elementwise

// Reverse-mode sweep from a scalar root. Leaf grads accumulate across calls;
// callers zero them between steps.
void backward(const NodePtr& root);

// --- parameters ------------------------------------------------------------

// Ordered trainable leaves plus an optional detached snapshot (the fixed
// parameter copy used by teacher paths). The snapshot never requires grad.
struct Parameters {
  std::vector<NodePtr> live;
  std::vector<NodePtr> snapshot;

  bool has_snapshot() const { return !snapshot.empty(); }
  void allocate_snapshot();
  // snapshot <- decay * snapshot + (1 - decay) * live, elementwise
  void ema_update(double decay);
  void zero_grads();
  std::size_t total_size() const;
};

}  // namespace dessl::ndgrad
