#pragma once

// Threaded-comment corpus: loading newline-delimited dumps, eligibility
// filtering, username masking, and parent-comment lookup.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace commval {

struct Comment {
  std::string id;
  std::string parent_id;  // empty for top-level comments
  std::string link_id;    // submission id
  std::string community;
  std::string author;
  std::string body;
  std::int64_t score = 0;
  std::int64_t created_utc = 0;
  bool removed_by_moderator = false;
  bool deleted_by_author = false;

  bool is_top_level() const { return parent_id.empty(); }
};

// Immutable once built. Community iteration is deterministic: communities in
// name order, comments within a community in (created_utc, id) order.
class CommentStore {
 public:
  CommentStore() = default;
  explicit CommentStore(std::vector<Comment> comments,
                        std::string year_tag = {});

  std::size_t size() const { return comments_.size(); }
  bool empty() const { return comments_.empty(); }
  const std::string& year_tag() const { return year_tag_; }

  const Comment* find(const std::string& id) const;

  std::vector<std::string> communities() const;
  // Pointers into the store, ordered by (created_utc, id).
  std::vector<const Comment*> comments_in(const std::string& community) const;
  std::span<const Comment> all() const { return comments_; }

 private:
  std::vector<Comment> comments_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::map<std::string, std::vector<std::size_t>> by_community_;
  std::string year_tag_;
};

struct ExclusionLists {
  // Names are matched case-insensitively after trimming.
  std::set<std::string> bot_accounts;
  std::map<std::string, std::set<std::string>> moderator_accounts;
  // Moderator entries without a community apply everywhere.
  std::set<std::string> global_moderators;

  bool is_excluded(const std::string& community,
                   const std::string& author) const;

  // One account per line; moderator lines may be "community,account" to scope
  // the exclusion to one community.
  static ExclusionLists load(const std::filesystem::path& bots_file,
                             const std::filesystem::path& mods_file);
};

struct LoadStats {
  std::size_t parsed = 0;
  std::size_t skipped = 0;
};

// Parses a newline-delimited dump (one JSON object per line). Records missing
// required fields are counted and skipped; if more than half of the records
// fail to parse the file is rejected with SchemaError.
CommentStore load_corpus(const std::filesystem::path& path,
                         const std::string& year_tag,
                         LoadStats* stats = nullptr);

// Drops comments removed by moderators, deleted by their authors, authored by
// the deleted-account sentinel, or authored by excluded accounts.
CommentStore filter_eligible(const CommentStore& store,
                             const ExclusionLists& excl);

// Replaces /u/name and u/name mentions with the literal "[NAME]".
std::string mask_usernames(const std::string& body);

// Parent comment of `target` if present in `store`; absent for top-level
// comments and for parents that were filtered out.
std::optional<Comment> resolve_context(const CommentStore& store,
                                       const Comment& target);

// Store persistence (normalized JSONL, deterministic order).
void save_store(const CommentStore& store, const std::filesystem::path& path);
CommentStore load_store(const std::filesystem::path& path,
                        const std::string& year_tag = {});

}  // namespace commval
