#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

// Reverse-mode autodiff on dense row-major float64 tensors. Graph nodes are
// reference-counted; backward() walks the recorded graph in reverse
// topological order and accumulates gradients additively.

namespace unipart::tad {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

struct Node {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;
  bool requires_grad = false;  // leaf parameter flag
  bool needs_grad = false;     // requires_grad or reachable from one
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward;
  const char* op = "leaf";

  std::vector<double>& ensure_grad();
};

using NodePtr = std::shared_ptr<Node>;

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(NodePtr node) : node_(std::move(node)) {}

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<double> data,
                          bool requires_grad = false);
  static Tensor scalar(double value);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  std::size_t numel() const { return node_->data.size(); }
  std::size_t rows() const;
  std::size_t cols() const;

  std::vector<double>& data() { return node_->data; }
  const std::vector<double>& data() const { return node_->data; }
  const std::vector<double>& grad() const;
  bool requires_grad() const { return node_->requires_grad; }
  void set_requires_grad(bool flag);
  void zero_grad();
  double value() const;  // scalar tensors only

  NodePtr node() const { return node_; }

 private:
  NodePtr node_;
};

// Elementwise binary ops accept equal shapes, a scalar rhs, or a row vector
// rhs ([n] or [1,n]) broadcast over a [m,n] lhs.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor add_const(const Tensor& a, double c);
Tensor neg(const Tensor& a);

Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);  // input clamped to >= 1e-12
Tensor pow_const(const Tensor& a, double p);
Tensor sigmoid(const Tensor& a);
Tensor softplus(const Tensor& a);
Tensor gelu(const Tensor& a);

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor layer_norm(const Tensor& a, double eps = 1e-5);
Tensor softmax_rows(const Tensor& a);

// Fused scaled-dot-product attention over pre-projected q/k/v. An optional
// additive mask of shape [Lq, Lk] is applied to every head's scores.
Tensor attention(const Tensor& q, const Tensor& k, const Tensor& v,
                 std::size_t heads, const std::vector<double>* mask = nullptr);

Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);
Tensor mean_rows(const Tensor& a);  // [m,n] -> [1,n]

Tensor reshape(const Tensor& a, Shape shape);
Tensor concat_rows(const std::vector<Tensor>& parts);
Tensor slice_rows(const Tensor& a, std::size_t begin, std::size_t end);
Tensor gather_rows(const Tensor& a, std::vector<std::size_t> indices);

Tensor mse_loss(const Tensor& pred, const Tensor& target);
Tensor bce_with_logits(const Tensor& logits, const Tensor& targets);

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }
inline Tensor operator*(const Tensor& a, double s) { return scale(a, s); }
inline Tensor operator*(double s, const Tensor& a) { return scale(a, s); }

// Runs reverse-mode accumulation from a scalar loss. Throws on non-scalar.
void backward(const Tensor& loss);

// While alive, ops do not record the graph (inference mode). Nestable.
struct NoGradGuard {
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;
};
bool grad_enabled();

bool all_finite(const Tensor& t);

}  // namespace unipart::tad
