#pragma once

// Prosociality statistics: min-max normalization of externally supplied
// (supportiveness, agreement, politeness) scores, VIF collinearity
// diagnostics, first-component PCA prosociality, per-community logistic
// regression of the upvote label, and per-value recall with Table-2 style
// bucketing.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "commval/canonicalize.hpp"
#include "commval/extraction.hpp"
#include "commval/scales.hpp"

namespace commval {

struct ScoreRow {
  std::string comment_id;
  std::array<double, 3> metrics{};  // supportiveness, agreement, politeness
};

inline constexpr std::array<const char*, 3> kMetricNames = {
    "supportiveness", "agreement", "politeness"};

// CSV {comment_id, supportiveness, agreement, politeness}.
std::vector<ScoreRow> load_score_file(const std::filesystem::path& path);

struct NormalizedScores {
  std::vector<ScoreRow> rows;             // metrics now in [0,1]
  std::vector<std::string> warnings;      // one per degenerate column
};

// Per-metric min-max over the whole dataset; a constant column maps to 0.5
// everywhere with a warning. Throws Error{EmptyInput}.
NormalizedScores normalize_scores(std::vector<ScoreRow> raw);

// VIF_i = 1/(1 - R_i^2) with R_i^2 from OLS (with intercept) of column i on
// the other two. Throws Error{CollinearInput} when any R_i^2 >= 1 - 1e-12,
// Error{DegenerateColumn} for constant columns, Error{InsufficientData} for
// n < 4.
std::array<double, 3> vif(std::span<const std::array<double, 3>> columns_rows);

struct PcaModel {
  std::array<double, 3> component{};  // unit norm
  double variance_explained = 0.0;
  std::array<double, 3> means{};
  int orientation_sign = 1;
};

// First principal component of the covariance of the three metrics; scalar
// score = centered row . component. Sign is fixed so the scores correlate
// nonnegatively with the per-row metric mean. Throws Error{DegenerateInput}
// on zero total variance, Error{InsufficientData} for n < 3.
std::pair<PcaModel, std::vector<double>> pca_first_component(
    std::span<const std::array<double, 3>> rows);

struct RegressionResult {
  double intercept = 0.0;
  double slope = 0.0;
  double slope_std_err = 0.0;
  double z_statistic = 0.0;
  double p_value = 1.0;
  double odds_ratio = 1.0;  // exp(slope)
  bool converged = false;
  std::size_t n = 0;
};

// Maximum-likelihood logistic regression y ~ intercept + slope*x via damped
// Newton iterations; converged when the max coefficient change drops below
// 1e-10 (or 100 iterations). Wald z and two-sided normal p-value. Throws
// Error{SeparationDetected} when the slope diverges with still-improving
// likelihood, Error{SingleClass} when y is constant, Error{InsufficientData}
// for n < 10.
RegressionResult logistic_fit(std::span<const double> x,
                              std::span<const int> y);

struct OddsRow {
  std::string community;
  std::size_t n = 0;
  double odds_ratio = 1.0;
  double p_value = 1.0;
  std::int64_t subscriber_count = 0;
  bool significant = false;
};

struct OddsReport {
  std::vector<OddsRow> rows;          // every community, sorted by name
  std::vector<OddsRow> plot_rows;     // significant communities only
  double fraction_significant_below_one = 0.0;
  std::size_t n_significant = 0;
};

OddsReport odds_ratio_report(
    const std::map<std::string, RegressionResult>& fits,
    const CommunityMetaMap& meta, double alpha);

// HighPro iff score > mean + 1 population standard deviation. Returns 1 for
// HighPro, 0 for LowPro. Throws Error{EmptyInput}.
std::vector<int> prosocial_threshold(std::span<const double> scores);

inline constexpr const char* kBucketLow = "<0.1";
inline constexpr const char* kBucketMid = "0.1–0.25";   // 0.1–0.25
inline constexpr const char* kBucketHigh = "≥0.25";     // ≥0.25

std::string recall_bucket(double recall);

struct RecallRow {
  std::string value;
  Scale scale = Scale::Micro;
  std::int64_t n_comments = 0;
  std::int64_t n_high_prosocial = 0;
  double recall = 0.0;
  std::string bucket;
};

struct RecallReport {
  std::vector<RecallRow> rows;  // sorted by (scale, value)
  // (scale, bucket) -> number of values; Table-2 shape.
  std::map<std::pair<Scale, std::string>, int> bucket_counts;
  std::vector<std::string> warnings;
};

// recall(v) = highly-prosocial comments exhibiting v / comments exhibiting v.
// prosocial_label: comment id -> 1 (HighPro) or 0. Every keyword record's
// comment must be labeled; values with zero comments are omitted with a
// warning.
RecallReport recall_per_value(std::span<const ExtractionRecord> records,
                              const CanonicalMap& map,
                              const std::map<std::string, int>& prosocial_label,
                              const std::map<std::string, Scale>& value_scales);

}  // namespace commval
