#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace effortbk {

enum class FeatureKind { Continuous, Categorical };
enum class FeatureRole { Predictor, Effort, Ignored, Id };

const char* to_string(FeatureKind kind);
const char* to_string(FeatureRole role);
FeatureKind feature_kind_from(const std::string& token);
FeatureRole feature_role_from(const std::string& token);

/// One dataset column: name, value kind, and role in estimation.
/// Exactly one column per dataset has the effort role and it must be
/// continuous. An optional id column supplies record identifiers.
struct FeatureSchema {
  std::string name;
  FeatureKind kind = FeatureKind::Continuous;
  FeatureRole role = FeatureRole::Predictor;
};

/// A feature value: number for continuous columns, token for categorical.
/// Id and ignored columns are carried verbatim as tokens.
using Value = std::variant<double, std::string>;

struct ProjectRecord {
  std::string id;
  std::vector<Value> values;     // one per schema column
  std::optional<double> effort;  // unset for a query-only project
};

/// Observed min/max/mean of a continuous feature over a record set.
struct FeatureStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An immutable set of projects sharing one schema. Construction validates
/// every record against the schema and computes per-continuous-feature
/// statistics; afterwards the set is safe for concurrent reads.
class ProjectSet {
 public:
  ProjectSet() = default;

  /// Validates schema + records and computes feature statistics.
  /// Throws DatasetError on any violation (empty record set, value/kind
  /// mismatch, negative or missing effort, duplicate ids, ...).
  static ProjectSet create(std::vector<FeatureSchema> schema,
                           std::vector<ProjectRecord> records);

  const std::vector<FeatureSchema>& schema() const { return schema_; }
  const std::vector<ProjectRecord>& records() const { return records_; }
  const ProjectRecord& record(int i) const { return records_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(records_.size()); }

  int effort_index() const { return effort_index_; }
  std::vector<int> predictor_indices() const;

  /// Statistics for predictor/effort continuous columns; nullopt otherwise.
  const std::optional<FeatureStats>& stats(int feature) const {
    return stats_[static_cast<std::size_t>(feature)];
  }

  double effort_of(int i) const;

  /// New ProjectSet over the given record positions (order preserved),
  /// with statistics recomputed from the retained records only.
  ProjectSet subset(std::span<const int> indices) const;

 private:
  std::vector<FeatureSchema> schema_;
  std::vector<ProjectRecord> records_;
  std::vector<std::optional<FeatureStats>> stats_;
  int effort_index_ = -1;
};

/// Schema sidecar: one `column_name,kind,role` line per CSV column.
/// kind is `continuous` or `categorical`; role is `predictor`, `effort`,
/// `ignored` or `id`. Blank lines and lines starting with `#` are skipped.
std::vector<FeatureSchema> load_schema(const std::filesystem::path& schema_path);

/// Loads an RFC-4180 CSV (header row required) against its schema sidecar.
/// Record ids come from the id column when declared, otherwise the 0-based
/// data row index. Row order is preserved.
ProjectSet load_dataset(const std::filesystem::path& csv_path,
                        const std::filesystem::path& schema_path);

struct DatasetSummary {
  int cases = 0;
  double effort_min = 0.0;
  double effort_max = 0.0;
  double effort_mean = 0.0;
  std::vector<FeatureSchema> features;
};

DatasetSummary describe(const ProjectSet& ps);

}  // namespace effortbk
