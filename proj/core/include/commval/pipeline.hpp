#pragma once

// Stage orchestration. Each stage reads prior outputs from out_dir, writes
// its own outputs plus a manifest entry, and can be run standalone; `run`
// sequences them all. Stage failures throw Error{StageFailed} after the
// manifest is persisted with complete=false.

#include <filesystem>
#include <string>
#include <vector>

#include "commval/config.hpp"
#include "commval/manifest.hpp"

namespace commval {

// Output filenames inside out_dir.
namespace outfile {
inline constexpr const char* kStore = "store.jsonl";
inline constexpr const char* kThresholds = "thresholds.csv";
inline constexpr const char* kLabels = "labels.csv";
inline constexpr const char* kPairs = "pairs.jsonl";
inline constexpr const char* kExcluded = "excluded_communities.txt";
inline constexpr const char* kRegressionSample = "regression_sample.csv";
inline constexpr const char* kRecords = "records.jsonl";
inline constexpr const char* kBank = "bank.txt";
inline constexpr const char* kQuarantine = "quarantine.jsonl";
inline constexpr const char* kClusters = "clusters.json";
inline constexpr const char* kCanonicalMap = "canonical_map.csv";
inline constexpr const char* kMatrix = "matrix.json";
inline constexpr const char* kPrevalence = "prevalence.csv";
inline constexpr const char* kPrevalencePlot = "prevalence_plot.csv";
inline constexpr const char* kNaReport = "na_report.csv";
inline constexpr const char* kNaExplanations = "na_explanations.jsonl";
inline constexpr const char* kVif = "vif.json";
inline constexpr const char* kPca = "pca.csv";
inline constexpr const char* kRegression = "regression.csv";
inline constexpr const char* kOddsPlot = "odds_plot.csv";
inline constexpr const char* kRegressionSummary = "regression_summary.json";
inline constexpr const char* kRecall = "recall.csv";
inline constexpr const char* kRecallBuckets = "recall_buckets.csv";
inline constexpr const char* kWorksheet = "annotation_worksheet.csv";
inline constexpr const char* kAlpha = "alpha.json";
inline constexpr const char* kManifest = "manifest.json";
}  // namespace outfile

class Pipeline {
 public:
  explicit Pipeline(RunConfig config);

  // Stages, in pipeline order.
  void ingest();
  void label();
  void sample_pairs();
  void sample_regression();
  void extract();
  void canonicalize();
  void scales();
  void na_report();
  void prosocial();
  void recall();
  void annotate_sample();

  // Analysis entry points outside the linear pipeline.
  void compare(const std::string& community,
               const std::filesystem::path& matrix_a,
               const std::filesystem::path& matrix_b);
  void alpha(const std::filesystem::path& table_csv);

  // Re-emits every report derivable from existing stage outputs; missing
  // stages are skipped with a notice.
  void report();

  // ingest -> label -> sample-pairs -> sample-regression -> extract ->
  // canonicalize -> scales -> na-report [-> prosocial -> recall] -> report.
  // The prosocial stages run only when a score file is configured.
  void run_all();

  const RunManifest& manifest() const { return manifest_; }
  const RunConfig& config() const { return config_; }
  std::filesystem::path out_path(const char* name) const;

  // Notices accumulated by stages (skips, warnings); printed by the CLI.
  const std::vector<std::string>& notices() const { return notices_; }

 private:
  struct StageGuard;
  void load_or_init_manifest();
  void persist_manifest();
  std::string digest_of(const std::filesystem::path& path) const;
  void record_output(StageRecord& rec, const char* name) const;
  void require_output(const char* name, const std::string& needed_by) const;

  RunConfig config_;
  RunManifest manifest_;
  std::vector<std::string> notices_;
};

}  // namespace commval
