#include "plantune/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plantune/errors.hpp"

namespace plantune {

KdTree::KdTree(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidInput("kd-tree dimension must be positive");
}

double KdTree::dist_sq(int idx, const double* q) const {
  const double* p = point(idx);
  double sum = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double diff = p[d] - q[d];
    sum += diff * diff;
  }
  return sum;
}

int KdTree::insert(const double* q) {
  const int idx = size();
  coords_.insert(coords_.end(), q, q + dim_);
  left_.push_back(-1);
  right_.push_back(-1);
  split_dim_.push_back(0);

  if (root_ == -1) {
    root_ = idx;
    return idx;
  }
  int node = root_;
  for (;;) {
    const int d = split_dim_[node];
    int& child = q[d] < point(node)[d] ? left_[node] : right_[node];
    if (child == -1) {
      child = idx;
      split_dim_[idx] = (d + 1) % dim_;
      return idx;
    }
    node = child;
  }
}

int KdTree::nearest(const double* q) const {
  if (root_ == -1) throw InvalidInput("nearest on empty kd-tree");
  int best = root_;
  double best_sq = dist_sq(root_, q);

  // Explicit stack of subtrees still worth visiting.
  std::vector<int> stack;
  stack.reserve(64);
  stack.push_back(root_);
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    const double d_sq = dist_sq(node, q);
    if (d_sq < best_sq) {
      best_sq = d_sq;
      best = node;
    }
    const int d = split_dim_[node];
    const double delta = q[d] - point(node)[d];
    const int near_child = delta < 0.0 ? left_[node] : right_[node];
    const int far_child = delta < 0.0 ? right_[node] : left_[node];
    // Push far side first so the near side is explored next; prune the far
    // side when the splitting plane is beyond the current best.
    if (far_child != -1 && delta * delta <= best_sq) stack.push_back(far_child);
    if (near_child != -1) stack.push_back(near_child);
  }
  return best;
}

void KdTree::radius_query(const double* q, double radius, std::vector<int>& out) const {
  if (root_ == -1) return;
  const double r_sq = radius * radius;
  std::vector<int> stack;
  stack.reserve(64);
  stack.push_back(root_);
  const std::size_t first = out.size();
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (dist_sq(node, q) <= r_sq) out.push_back(node);
    const int d = split_dim_[node];
    const double delta = q[d] - point(node)[d];
    if (left_[node] != -1 && (delta < 0.0 || delta * delta <= r_sq)) stack.push_back(left_[node]);
    if (right_[node] != -1 && (delta >= 0.0 || delta * delta <= r_sq))
      stack.push_back(right_[node]);
  }
  std::sort(out.begin() + first, out.end());
}

int KdTree::nearest_linear(const double* q) const {
  if (size() == 0) throw InvalidInput("nearest on empty kd-tree");
  int best = 0;
  double best_sq = dist_sq(0, q);
  for (int i = 1; i < size(); ++i) {
    const double d_sq = dist_sq(i, q);
    if (d_sq < best_sq) {
      best_sq = d_sq;
      best = i;
    }
  }
  return best;
}

void KdTree::radius_query_linear(const double* q, double radius, std::vector<int>& out) const {
  const double r_sq = radius * radius;
  for (int i = 0; i < size(); ++i)
    if (dist_sq(i, q) <= r_sq) out.push_back(i);
}

}  // namespace plantune
