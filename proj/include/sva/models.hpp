#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sva/features.hpp"

namespace sva::models {

enum class Family { lr, svm, knn, rf };

Family family_from_string(std::string_view name);
std::string to_string(Family family);

enum class KnnWeight { uniform, distance };

// One grid point. Only the fields of the owning family are meaningful;
// -1 stands for "unlimited" on the tree limits.
struct HyperConfig {
  Family family = Family::lr;
  double regularization_c = 1.0;           // lr, svm
  int neighbors = 5;                       // knn
  KnnWeight weight = KnnWeight::uniform;   // knn
  int distance_norm = 2;                   // knn: Minkowski p
  int estimators = 100;                    // rf
  int max_depth = -1;                      // rf
  int max_leaf_nodes = -1;                 // rf

  std::string describe() const;
  bool operator==(const HyperConfig&) const = default;
};

// The grids used for tuning, in declared enumeration order (the grid-search
// tie-break order).
std::vector<HyperConfig> default_grid(Family family);

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int leaf_class = -1;
};

struct Tree {
  std::vector<TreeNode> nodes;
  int predict(const features::FeatureVector& x) const;
};

struct TrainedModel {
  Family family = Family::lr;
  HyperConfig config;
  std::vector<std::string> classes;  // first-appearance order in training y
  std::uint64_t seed = 0;
  std::size_t dimension = 0;

  // lr/svm: one weight vector + bias per class (one-vs-rest)
  std::vector<std::vector<double>> weights;
  std::vector<double> biases;
  // knn: stored training set (class ids into classes)
  std::vector<features::FeatureVector> train_x;
  std::vector<int> train_y;
  // rf
  std::vector<Tree> forest;
};

// lr: one-vs-rest logistic regression, log-loss + (1/(2C))·||w||^2, full-batch
// gradient descent with backtracking line search, tolerance 1e-6 on the loss
// delta, at most 5000 iterations. svm: same optimizer on the hinge loss.
// knn: stores the training data. rf: bootstrapped Gini trees with sqrt(d)
// feature subsampling per split, honoring max_depth/max_leaf_nodes.
TrainedModel train(Family family, const HyperConfig& config,
                   const std::vector<features::FeatureVector>& x,
                   const std::vector<std::string>& y, std::uint64_t seed);

std::vector<std::string> predict(const TrainedModel& model,
                                 const std::vector<features::FeatureVector>& x);

struct GridResult {
  HyperConfig best_config;
  TrainedModel best_model;
  double validation_mcc = 0.0;
};

// Trains one model per grid entry, scores validation MCC, and returns the
// maximizer; ties keep the earliest grid entry.
GridResult grid_search(Family family, const std::vector<HyperConfig>& grid,
                       const std::vector<features::FeatureVector>& train_x,
                       const std::vector<std::string>& train_y,
                       const std::vector<features::FeatureVector>& val_x,
                       const std::vector<std::string>& val_y, std::uint64_t seed);

// Versioned JSON persistence; round trips are byte-exact.
std::string save_model(const TrainedModel& model);
TrainedModel load_model(std::string_view text);

}  // namespace sva::models
