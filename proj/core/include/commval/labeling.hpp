#pragma once

// Per-community score percentiles, Low/Mid/High labels, and the two seeded
// samples drawn from them: {context, highly-upvoted comment} pairs for
// extraction and balanced High/Low sets for the regression analysis.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "commval/corpus.hpp"

namespace commval {

enum class ScoreLabel { Low, Mid, High };

std::string_view to_string(ScoreLabel label);

struct SamplePlan {
  int pairs_per_community = 100;
  int regression_per_class = 2500;
  double low_percentile = 0.70;
  double high_percentile = 0.95;
  std::uint64_t seed = 0;

  void validate() const;  // throws Error{BadInput}
};

// Linear-interpolation percentile: rank r = p*(n-1), interpolated between the
// two bracketing order statistics. Throws Error{EmptyInput}.
double percentile(std::vector<std::int64_t> scores, double p);

struct CommunityLabels {
  double low_threshold = 0.0;
  double high_threshold = 0.0;
  std::size_t n = 0;
  std::unordered_map<std::string, ScoreLabel> by_id;
};

// Low iff score strictly below the low threshold, High iff strictly above the
// high threshold, Mid otherwise. All comments must share one community.
CommunityLabels label_scores(std::span<const Comment* const> community_comments,
                             const SamplePlan& plan);

using LabelMaps = std::map<std::string, CommunityLabels>;

// Labels every community in the store.
LabelMaps label_store(const CommentStore& store, const SamplePlan& plan);

struct CommentPair {
  std::string community;
  Comment context;  // body username-masked
  Comment target;   // body username-masked
  std::string year_tag;
};

struct PairSample {
  std::vector<CommentPair> pairs;
  std::vector<std::string> excluded_communities;  // fewer candidates than n
};

// Per community: uniform seeded sample, without replacement, of exactly
// plan.pairs_per_community High-labeled targets whose parent comment is in
// the store. Communities with fewer candidates yield zero pairs and are
// listed as excluded.
PairSample sample_pairs(const CommentStore& store, const LabelMaps& labels,
                        const SamplePlan& plan);

struct RegressionSample {
  // (comment id, is_high); equal counts per class.
  std::vector<std::pair<std::string, bool>> members;
};

struct RegressionSet {
  std::map<std::string, RegressionSample> by_community;
  std::vector<std::string> skipped_communities;  // one class empty
};

// Per community: min(plan.regression_per_class, |High|, |Low|) comments from
// each class, seeded and deterministic.
RegressionSet sample_regression_set(const CommentStore& store,
                                    const LabelMaps& labels,
                                    const SamplePlan& plan);

// Builds the masked pair for a sampled (target, context) id pair.
CommentPair make_pair(const CommentStore& store, const std::string& target_id,
                      const std::string& context_id,
                      const std::string& year_tag);

}  // namespace commval
