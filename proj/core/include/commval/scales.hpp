#pragma once

// Value x community matrix, macro/meso/micro classification by prevalence,
// prevalence reporting, year-over-year diffs, and N/A accounting.

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "commval/canonicalize.hpp"
#include "commval/extraction.hpp"

namespace commval {

enum class Scale { Macro, Meso, Micro };

std::string_view to_string(Scale scale);

struct ScaleThresholds {
  double macro_fraction = 0.75;
  double micro_fraction = 0.25;

  void validate() const;  // throws Error{BadInput}

  // macro iff prevalence >= ceil(macro_fraction * n_communities);
  // micro iff prevalence <= floor(micro_fraction * n_communities).
  int macro_min(int n_communities) const;
  int micro_max(int n_communities) const;
};

class ValueCommunityMatrix {
 public:
  ValueCommunityMatrix() = default;
  ValueCommunityMatrix(std::vector<std::string> values,
                       std::vector<std::string> communities,
                       std::vector<std::vector<std::int64_t>> counts,
                       std::string year_tag);

  const std::vector<std::string>& values() const { return values_; }
  const std::vector<std::string>& communities() const { return communities_; }
  const std::string& year_tag() const { return year_tag_; }

  std::int64_t count(const std::string& value,
                     const std::string& community) const;
  // Number of communities where the value appears at least once.
  int prevalence(const std::string& value) const;
  std::int64_t total_comments(const std::string& value) const;

  bool has_value(const std::string& value) const;
  bool has_community(const std::string& community) const;

  // Values with a nonzero count in the given community.
  std::set<std::string> values_in(const std::string& community) const;

  void save(const std::filesystem::path& path) const;
  static ValueCommunityMatrix load(const std::filesystem::path& path);

 private:
  std::vector<std::string> values_;       // sorted
  std::vector<std::string> communities_;  // sorted
  std::vector<std::vector<std::int64_t>> counts_;  // [value][community]
  std::map<std::string, std::size_t> value_index_;
  std::map<std::string, std::size_t> community_index_;
  std::string year_tag_;
};

// counts(v,c) = number of records in community c with at least one keyword
// mapping to v (a record counts once per value). NA records contribute
// nothing but keep their community as a column. Throws
// Error{UnmappedKeyword} if the map does not cover a record keyword.
ValueCommunityMatrix build_matrix(std::span<const ExtractionRecord> records,
                                  const CanonicalMap& map,
                                  const std::string& year_tag);

// Throws Error{UnknownValue} for values absent from the matrix.
Scale classify_scale(const std::string& value,
                     const ValueCommunityMatrix& matrix,
                     const ScaleThresholds& thresholds);

struct PrevalenceRow {
  std::string value;
  int prevalence = 0;
  Scale scale = Scale::Micro;
  std::int64_t comment_count = 0;
  std::string year_tag;
};

// Sorted by (scale, prevalence desc, value).
std::vector<PrevalenceRow> prevalence_report(const ValueCommunityMatrix& matrix,
                                             const ScaleThresholds& thresholds);

struct YearComparison {
  std::set<std::string> kept;
  std::set<std::string> added;
  std::set<std::string> removed;
};

// Set difference of the community's value sets in two matrices. Throws
// Error{UnknownCommunity} if the community is missing from either.
YearComparison compare_years(const ValueCommunityMatrix& year_a,
                             const ValueCommunityMatrix& year_b,
                             const std::string& community);

struct NAReport {
  std::map<std::string, std::int64_t> per_community;
  std::int64_t total = 0;
  struct Explanation {
    std::string community;
    std::string target_id;
    std::string reasoning;
  };
  std::vector<Explanation> explanations;  // exported for manual coding
};

NAReport na_report(std::span<const ExtractionRecord> records);

}  // namespace commval
