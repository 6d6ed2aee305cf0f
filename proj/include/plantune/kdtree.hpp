#ifndef PLANTUNE_KDTREE_HPP_
#define PLANTUNE_KDTREE_HPP_

#include <vector>

namespace plantune {

/// Incremental kd-tree over fixed-dimension points. Points are append-only and
/// never rebalanced; insertion order matters only for performance. Queries and
/// inserts are not internally synchronized - callers serialize access.
class KdTree {
 public:
  explicit KdTree(int dim);

  int size() const { return static_cast<int>(split_dim_.size()); }
  int dim() const { return dim_; }

  /// Appends a point, returns its index.
  int insert(const double* q);

  /// Index of a closest stored point (tree must be non-empty).
  int nearest(const double* q) const;

  /// Indices of all points within Euclidean distance `radius` of q (inclusive),
  /// appended to `out` in ascending index order.
  void radius_query(const double* q, double radius, std::vector<int>& out) const;

  /// Brute-force reference used by tests and benchmarks.
  int nearest_linear(const double* q) const;
  void radius_query_linear(const double* q, double radius, std::vector<int>& out) const;

  const double* point(int idx) const { return &coords_[static_cast<std::size_t>(idx) * dim_]; }

 private:
  double dist_sq(int idx, const double* q) const;

  int dim_;
  int root_ = -1;
  std::vector<double> coords_;    // size() * dim_, flat
  std::vector<int> left_, right_;
  std::vector<int> split_dim_;
};

}  // namespace plantune

#endif  // PLANTUNE_KDTREE_HPP_
