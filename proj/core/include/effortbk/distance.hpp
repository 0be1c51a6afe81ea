#pragma once

#include <vector>

#include "effortbk/dataset.hpp"
#include "effortbk/kmedoids.hpp"

namespace effortbk {

/// Distance configuration: which features act as predictors and, for the
/// continuous ones, the observed range of the training set they normalize
/// against.
///
/// `literal_eq2` selects the continuous per-feature term. When true the
/// squared difference is divided by the raw range, (a-b)^2/(max-min); when
/// false by the squared range, ((a-b)/(max-min))^2 — the conventional
/// min-max normalized form. Rankings can differ between the two on
/// multi-feature data, so both are exposed.
struct DistanceConfig {
  struct Predictor {
    int index = -1;
    FeatureKind kind = FeatureKind::Continuous;
    double min = 0.0;  // continuous only
    double max = 0.0;
  };
  std::vector<Predictor> predictors;
  bool literal_eq2 = true;
};

/// Builds the config from a training set's schema and statistics.
/// Throws std::invalid_argument when the set declares no predictors.
DistanceConfig make_distance_config(const ProjectSet& train, bool literal_eq2);

/// Per-feature dissimilarity term. Continuous: see DistanceConfig; a zero
/// range is an error unless the two values are equal (then 0). Categorical:
/// 0 on equal tokens, 1 otherwise. Values outside [min,max] are allowed and
/// not clamped: query projects may legitimately extend the training range.
double feature_delta(const Value& a, const Value& b, FeatureKind kind, double min, double max,
                     bool literal_eq2);

/// Mixed-type distance between two schema-conformant records:
/// (1/m) * sqrt(sum of per-predictor deltas). Symmetric, zero on identical
/// predictor values.
double distance(const ProjectRecord& a, const ProjectRecord& b, const DistanceConfig& cfg);

struct Neighbor {
  int index = -1;
  double dist = 0.0;
};

/// The k nearest pool records to `query`, ascending by distance with ties
/// broken by ascending record index.
std::vector<Neighbor> nearest_neighbors(const ProjectRecord& query, const ProjectSet& pool,
                                        const DistanceConfig& cfg, int k);

/// All-pairs distances over a record set.
DissimilarityMatrix build_dissimilarity_matrix(const ProjectSet& ps, const DistanceConfig& cfg);

}  // namespace effortbk
