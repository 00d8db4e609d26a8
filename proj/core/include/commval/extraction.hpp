#pragma once

// Value-extraction stage: prompt construction, response parsing, the growing
// value bank, and the batch driver with caching, retry, and quarantine.

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "commval/labeling.hpp"
#include "commval/provider.hpp"

namespace commval {

// Placeholders: {SUBREDDIT} {SUBREDDIT_DESCRIPTION} {VALUE_BANK} {CONTEXT}
// {COMMENT}. Every placeholder must be present; {SUBREDDIT} appears twice in
// the default template, so presence (not uniqueness) is what is validated.
struct PromptTemplate {
  std::string text;

  static PromptTemplate default_template();
  static PromptTemplate from_file(const std::filesystem::path& path);

  void validate() const;  // throws Error{TemplateError}
};

// Ordered list of keywords the model is told to reuse. Entries are lowercase,
// trimmed, deduplicated case-insensitively; order is first-use order.
class ValueBank {
 public:
  // Returns true if the keyword was new. Empty-after-trim keywords are
  // ignored.
  bool add(const std::string& keyword);

  const std::vector<std::string>& entries() const { return entries_; }
  bool contains(const std::string& keyword) const;
  std::size_t size() const { return entries_.size(); }

  // Comma-separated in bank order, "(empty)" when empty. A nonzero
  // char_budget keeps only the earliest entries that fit.
  std::string render(std::size_t char_budget = 0) const;

 private:
  std::vector<std::string> entries_;
  std::unordered_set<std::string> seen_;
};

std::string normalize_keyword(const std::string& raw);

struct CommunityMeta {
  std::string community;
  std::int64_t subscriber_count = 0;
  std::string description;
};

// CSV {community, subscriber_count, description}.
using CommunityMetaMap = std::map<std::string, CommunityMeta>;
CommunityMetaMap load_community_meta(const std::filesystem::path& path);

// Substitutes all placeholder occurrences. Throws Error{TemplateError} if one
// is missing from the template.
std::string build_prompt(const PromptTemplate& tmpl,
                         const std::string& community,
                         const std::string& description, const ValueBank& bank,
                         const CommentPair& pair,
                         std::size_t bank_render_budget = 0);

struct ParsedResponse {
  std::vector<std::string> keywords;  // empty iff na
  bool na = false;
  std::string reasoning;
};

// Accepts {"thinking": text, "answer": "N/A" | [1..3 strings]}. Keywords are
// lowercased, trimmed, and deduplicated; more than three after dedup is a
// ParseError, as are empty lists and non-string entries.
ParsedResponse parse_response(const std::string& raw);

struct ExtractionRecord {
  std::string community;
  std::string target_id;
  std::vector<std::string> keywords;  // empty iff na
  bool na = false;
  std::string reasoning;
  std::string model_id;
  bool cached = false;
};

struct QuarantinedPair {
  std::string community;
  std::string target_id;
  int attempts = 0;
  std::string last_response;
};

// One pair: cache lookup, provider call, parse with retry. Parse failures
// after max_retries throw Error{Quarantined}; transport failures after
// max_retries throw Error{ProviderUnavailable}. Only successfully parsed
// responses are written to the cache.
ExtractionRecord extract_one(Provider& provider, const ProviderConfig& config,
                             const PromptTemplate& tmpl,
                             const CommunityMeta& meta, const ValueBank& bank,
                             const CommentPair& pair, ResponseCache* cache);

struct ExtractionRun {
  std::vector<ExtractionRecord> records;
  ValueBank bank;
  std::vector<QuarantinedPair> quarantined;
  std::size_t provider_failures = 0;
  std::size_t cache_hits = 0;
};

// Processes pairs in deterministic (community, target_id) order; the bank
// grows after each non-NA record and later prompts observe every earlier
// update. Aborts with Error{RunAborted} when provider failures exceed
// config.failure_budget * |pairs|.
ExtractionRun run_extraction(std::span<const CommentPair> pairs,
                             Provider& provider, const ProviderConfig& config,
                             const PromptTemplate& tmpl,
                             const CommunityMetaMap& meta,
                             ResponseCache* cache);

// Record persistence (newline-delimited JSON). The cached flag is runtime
// provenance and is not written, so cold and warmed runs emit identical files.
void save_records(std::span<const ExtractionRecord> records,
                  const std::filesystem::path& path);
std::vector<ExtractionRecord> load_records(const std::filesystem::path& path);

}  // namespace commval
