#pragma once

// Run configuration: a plain key=value file with an explicit schema. Unknown
// keys are rejected so typos cannot silently fall back to defaults.

#include <cstdint>
#include <filesystem>
#include <string>

#include "commval/labeling.hpp"
#include "commval/provider.hpp"
#include "commval/scales.hpp"

namespace commval {

struct RunConfig {
  // identity
  std::string year_tag = "run";
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "out";

  // corpus inputs
  std::filesystem::path input;
  std::filesystem::path bots_file;
  std::filesystem::path mods_file;
  std::filesystem::path community_meta;

  // labeling / sampling
  SamplePlan plan;

  // extraction
  ProviderConfig provider;
  std::filesystem::path template_file;  // empty = built-in default template

  // canonicalize
  std::string embedder = "hash";  // "hash" or "file"
  int embedding_dim = 32;
  std::uint64_t embedding_seed = 0;
  std::filesystem::path embeddings_file;
  int cluster_k = 100;
  std::filesystem::path overrides_file;

  // scales
  ScaleThresholds thresholds;

  // prosocial
  std::filesystem::path scores_file;
  double alpha = 0.05;

  // reliability
  int annotate_per_community = 2;

  static RunConfig load(const std::filesystem::path& path);
  // Applies "key=value" pairs; throws Error{ConfigError} on unknown keys or
  // unparseable values.
  void apply(const std::string& key, const std::string& value);
  void validate() const;

  // Canonical "key=value\n" rendering of every setting (defaults included),
  // the input to the manifest's config hash.
  std::string canonical_text() const;
};

}  // namespace commval
