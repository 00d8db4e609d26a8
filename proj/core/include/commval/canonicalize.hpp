#pragma once

// Keyword canonicalization: embedding pool, bottom-up average-linkage
// clustering under cosine distance, cluster labeling, and ordered regroup
// overrides producing the keyword -> canonical value map.

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "commval/provider.hpp"

namespace commval {

class Embedder {
 public:
  virtual ~Embedder() = default;
  // Deterministic within a run: identical keyword -> identical vector.
  virtual std::vector<double> embed(const std::string& keyword) = 0;
  virtual int dim() const = 0;
  virtual std::string name() const = 0;
};

// Seeded hash-projection embedder: each coordinate is a uniform draw keyed by
// (seed, keyword, coordinate). Deterministic and model-free; intended for
// tests and offline runs.
class HashEmbedder : public Embedder {
 public:
  explicit HashEmbedder(std::uint64_t seed = 0, int dim = 32);
  std::vector<double> embed(const std::string& keyword) override;
  int dim() const override { return dim_; }
  std::string name() const override;

 private:
  std::uint64_t seed_;
  int dim_;
};

// Adapter for precomputed embeddings: JSONL {"keyword":.., "vector":[..]}.
// Unknown keywords throw Error{EmbedderUnavailable}.
class FileEmbedder : public Embedder {
 public:
  explicit FileEmbedder(const std::filesystem::path& path);
  std::vector<double> embed(const std::string& keyword) override;
  int dim() const override { return dim_; }
  std::string name() const override { return "file"; }

 private:
  std::map<std::string, std::vector<double>> vectors_;
  int dim_ = 0;
};

// keyword -> unit vector. std::map keeps iteration in keyword order, which is
// what makes clustering independent of insertion order.
struct EmbeddingPool {
  int dim = 0;
  std::map<std::string, std::vector<double>> vectors;

  std::size_t size() const { return vectors.size(); }
};

// One unit vector per distinct keyword. Throws Error{EmbedderUnavailable} if
// the embedder fails or yields a zero vector.
EmbeddingPool embed_keywords(Embedder& embedder,
                             const std::set<std::string>& keywords);

struct ValueCluster {
  int cluster_id = 0;
  std::vector<std::string> members;  // sorted
  std::string label;                 // empty until labeled
};

// Average-linkage agglomerative clustering under cosine distance, stopping at
// exactly k clusters. Points are indexed in lexicographic keyword order and a
// merged cluster keeps its smallest index, so equal-distance merges resolve
// by (min cluster id, then the other id) and the partition is invariant to
// keyword insertion order. Throws Error{BadK} unless 1 <= k <= |pool|.
std::vector<ValueCluster> agglomerative_cluster(const EmbeddingPool& pool,
                                                int k);

// Asks the provider for a one-word lowercase label. After one retry still
// multi-word -> falls back to the most frequent member keyword (frequency map
// optional; ties and missing counts resolve to the lexicographically smallest
// member).
std::string label_cluster(Provider& provider, const ValueCluster& cluster,
                          const std::map<std::string, std::int64_t>&
                              keyword_frequency = {});

struct RegroupDirective {
  enum class Kind { Merge, Rename, Move };
  Kind kind;
  std::string a;       // merge: first label; rename: old label; move: keyword
  std::string b;       // merge: second label
  std::string target;  // resulting label
};

using RegroupOverride = std::vector<RegroupDirective>;

// One directive per line: "merge a b -> c", "rename a -> b",
// "move \"kw\" -> a". Blank lines and #-comments allowed.
RegroupOverride parse_overrides(const std::filesystem::path& path);
RegroupOverride parse_overrides_text(const std::string& text);

using CanonicalMap = std::map<std::string, std::string>;

// Applies directives in order over the labeled clusters. merge/rename targets
// may introduce new labels; move targets must already exist. Throws
// Error{UnknownLabel} / Error{UnknownKeyword}.
CanonicalMap apply_regroup_overrides(const std::vector<ValueCluster>& clusters,
                                     const RegroupOverride& overrides);

}  // namespace commval
