#include "commval/labeling.hpp"

#include <algorithm>
#include <cmath>

#include "commval/error.hpp"
#include "commval/rng.hpp"

namespace commval {

std::string_view to_string(ScoreLabel label) {
  switch (label) {
    case ScoreLabel::Low: return "low";
    case ScoreLabel::Mid: return "mid";
    case ScoreLabel::High: return "high";
  }
  return "?";
}

void SamplePlan::validate() const {
  if (pairs_per_community <= 0 || regression_per_class <= 0) {
    throw Error(Errc::BadInput, "sample counts must be positive");
  }
  if (!(0.0 < low_percentile && low_percentile < high_percentile &&
        high_percentile < 1.0)) {
    throw Error(Errc::BadInput,
                "need 0 < low_percentile < high_percentile < 1");
  }
}

double percentile(std::vector<std::int64_t> scores, double p) {
  if (scores.empty()) throw Error(Errc::EmptyInput, "percentile of nothing");
  if (p < 0.0 || p > 1.0) throw Error(Errc::BadInput, "p outside [0,1]");
  std::sort(scores.begin(), scores.end());
  const std::size_t n = scores.size();
  double rank = p * static_cast<double>(n - 1);
  auto lo = static_cast<std::size_t>(rank);
  if (lo + 1 >= n) return static_cast<double>(scores[n - 1]);
  double frac = rank - static_cast<double>(lo);
  return static_cast<double>(scores[lo]) +
         frac * static_cast<double>(scores[lo + 1] - scores[lo]);
}

CommunityLabels label_scores(
    std::span<const Comment* const> community_comments,
    const SamplePlan& plan) {
  plan.validate();
  if (community_comments.empty()) {
    throw Error(Errc::EmptyInput, "no comments to label");
  }
  std::vector<std::int64_t> scores;
  scores.reserve(community_comments.size());
  for (const Comment* c : community_comments) scores.push_back(c->score);

  CommunityLabels out;
  out.n = community_comments.size();
  out.low_threshold = percentile(scores, plan.low_percentile);
  out.high_threshold = percentile(scores, plan.high_percentile);
  out.by_id.reserve(community_comments.size());
  for (const Comment* c : community_comments) {
    ScoreLabel label = ScoreLabel::Mid;
    if (static_cast<double>(c->score) < out.low_threshold) {
      label = ScoreLabel::Low;
    } else if (static_cast<double>(c->score) > out.high_threshold) {
      label = ScoreLabel::High;
    }
    out.by_id.emplace(c->id, label);
  }
  return out;
}

LabelMaps label_store(const CommentStore& store, const SamplePlan& plan) {
  LabelMaps maps;
  for (const std::string& community : store.communities()) {
    auto comments = store.comments_in(community);
    maps.emplace(community, label_scores(comments, plan));
  }
  return maps;
}

CommentPair make_pair(const CommentStore& store, const std::string& target_id,
                      const std::string& context_id,
                      const std::string& year_tag) {
  const Comment* target = store.find(target_id);
  const Comment* context = store.find(context_id);
  if (!target || !context) {
    throw Error(Errc::BadInput, "pair ids missing from store: " + target_id);
  }
  CommentPair pair;
  pair.community = target->community;
  pair.context = *context;
  pair.target = *target;
  pair.context.body = mask_usernames(pair.context.body);
  pair.target.body = mask_usernames(pair.target.body);
  pair.year_tag = year_tag;
  return pair;
}

PairSample sample_pairs(const CommentStore& store, const LabelMaps& labels,
                        const SamplePlan& plan) {
  plan.validate();
  PairSample out;
  for (const std::string& community : store.communities()) {
    auto labels_it = labels.find(community);
    if (labels_it == labels.end()) {
      throw Error(Errc::BadInput, "no labels for community " + community);
    }
    const auto& by_id = labels_it->second.by_id;

    // Candidates in (created_utc, id) order: High targets with a resolvable
    // parent comment.
    std::vector<const Comment*> candidates;
    for (const Comment* c : store.comments_in(community)) {
      auto label_it = by_id.find(c->id);
      if (label_it == by_id.end() || label_it->second != ScoreLabel::High) {
        continue;
      }
      if (c->parent_id.empty() || store.find(c->parent_id) == nullptr) {
        continue;
      }
      candidates.push_back(c);
    }

    auto want = static_cast<std::size_t>(plan.pairs_per_community);
    if (candidates.size() < want) {
      out.excluded_communities.push_back(community);
      continue;
    }
    rng::SeededRng gen(rng::sub_seed(plan.seed, community + "/pairs"));
    for (std::size_t idx : rng::sample_indices(gen, candidates.size(), want)) {
      const Comment* target = candidates[idx];
      out.pairs.push_back(make_pair(store, target->id, target->parent_id,
                                    store.year_tag()));
    }
  }
  return out;
}

RegressionSet sample_regression_set(const CommentStore& store,
                                    const LabelMaps& labels,
                                    const SamplePlan& plan) {
  plan.validate();
  RegressionSet out;
  for (const std::string& community : store.communities()) {
    auto labels_it = labels.find(community);
    if (labels_it == labels.end()) {
      throw Error(Errc::BadInput, "no labels for community " + community);
    }
    const auto& by_id = labels_it->second.by_id;

    std::vector<const Comment*> high;
    std::vector<const Comment*> low;
    for (const Comment* c : store.comments_in(community)) {
      auto it = by_id.find(c->id);
      if (it == by_id.end()) continue;
      if (it->second == ScoreLabel::High) high.push_back(c);
      else if (it->second == ScoreLabel::Low) low.push_back(c);
    }
    if (high.empty() || low.empty()) {
      out.skipped_communities.push_back(community);
      continue;
    }
    std::size_t per_class =
        std::min({static_cast<std::size_t>(plan.regression_per_class),
                  high.size(), low.size()});

    RegressionSample sample;
    auto draw = [&](const std::vector<const Comment*>& pool, bool is_high,
                    const char* tag) {
      rng::SeededRng gen(
          rng::sub_seed(plan.seed, community + "/regression/" + tag));
      for (std::size_t idx : rng::sample_indices(gen, pool.size(), per_class)) {
        sample.members.emplace_back(pool[idx]->id, is_high);
      }
    };
    draw(high, true, "high");
    draw(low, false, "low");
    out.by_community.emplace(community, std::move(sample));
  }
  return out;
}

}  // namespace commval
