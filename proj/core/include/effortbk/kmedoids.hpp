#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace effortbk {

/// Symmetric nonnegative dissimilarity matrix with zero diagonal.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  explicit DissimilarityMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }

  double at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Sets both (i,j) and (j,i); the diagonal stays zero.
  void set(int i, int j, double value) {
    d_[static_cast<std::size_t>(i) * n_ + j] = value;
    d_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

  bool is_valid() const;

 private:
  int n_ = 0;
  std::vector<double> d_;
};

/// A cluster over matrix item indices. `members` is sorted ascending and
/// `medoid` minimizes the within-cluster distance sum (ties: lowest index).
struct Cluster {
  std::vector<int> members;
  int medoid = -1;
  double compactness = 0.0;
};

/// Member of `members` minimizing the sum of distances to the others.
/// Ties break toward the lowest item index.
int find_medoid(std::span<const int> members, const DissimilarityMatrix& d);

/// Cluster homogeneity: mean squared distance of the non-medoid members to
/// the medoid, i.e. sum_{j != medoid} d(j, medoid)^2 / (|members| - 1).
/// Singletons have compactness 0. Smaller means more homogeneous.
double compactness(std::span<const int> members, int medoid, const DissimilarityMatrix& d);

Cluster make_cluster(std::vector<int> members, const DissimilarityMatrix& d);

struct KMedoidsOptions {
  int restarts = 5;
  int max_iterations = 100;
};

struct KMedoidsResult {
  std::vector<Cluster> clusters;        // ordered by medoid index
  double objective = 0.0;               // sum of member-to-medoid distances
  bool degenerate = false;              // empty-cluster repair fired (duplicate medoids)
  std::vector<double> objective_trace;  // objective after each iteration, winning restart
};

/// Alternating (Voronoi) k-medoids over the given item indices: assign each
/// item to its nearest medoid (ties: lowest medoid index), then recompute
/// each cluster's medoid, until the medoid set is a fixed point. Runs
/// `restarts` independent seeded starts and keeps the lowest objective.
/// Deterministic for a fixed seed.
KMedoidsResult k_medoids(const DissimilarityMatrix& d, std::span<const int> items, int k,
                         std::uint64_t seed, const KMedoidsOptions& options = {});

}  // namespace effortbk
