#include "commval/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "commval/error.hpp"

namespace commval {

using nlohmann::json;

namespace {

constexpr const char* kDeletedSentinel = "[deleted]";

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string strip_thing_prefix(const std::string& id) {
  // Reddit "thing" ids carry a tN_ prefix in dump files.
  if (id.size() > 3 && id[0] == 't' && id[2] == '_' && std::isdigit(
          static_cast<unsigned char>(id[1]))) {
    return id.substr(3);
  }
  return id;
}

// Parses one dump line into a Comment. Returns false when required fields are
// missing or of the wrong type.
bool parse_record(const std::string& line, Comment& out) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object()) return false;

  auto get_string = [&](const char* key, std::string& dst) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) return false;
    dst = it->get<std::string>();
    return true;
  };

  if (!get_string("id", out.id) || out.id.empty()) return false;

  std::string community;
  if (!get_string("community", community) &&
      !get_string("subreddit", community)) {
    return false;
  }
  if (community.empty()) return false;
  out.community = community;

  if (!get_string("author", out.author)) return false;
  if (!get_string("body", out.body)) return false;

  auto score_it = j.find("score");
  if (score_it == j.end() || !score_it->is_number()) return false;
  out.score = score_it->get<std::int64_t>();

  auto created_it = j.find("created_utc");
  if (created_it == j.end()) return false;
  if (created_it->is_number()) {
    out.created_utc = static_cast<std::int64_t>(created_it->get<double>());
  } else if (created_it->is_string()) {
    // Pushshift dumps sometimes store epoch seconds as strings.
    try {
      out.created_utc = std::stoll(created_it->get<std::string>());
    } catch (...) {
      return false;
    }
  } else {
    return false;
  }

  std::string link_id;
  get_string("link_id", link_id);
  out.link_id = strip_thing_prefix(link_id);

  std::string parent_raw;
  out.parent_id.clear();
  if (get_string("parent_id", parent_raw) && !parent_raw.empty()) {
    if (parent_raw.rfind("t3_", 0) == 0) {
      // reply to the submission itself -> top-level
    } else {
      std::string stripped = strip_thing_prefix(parent_raw);
      if (!out.link_id.empty() && stripped == out.link_id) {
        // bare id equal to the submission id -> top-level
      } else {
        out.parent_id = stripped;
      }
    }
  }

  // Explicit flags win when present (our normalized store format); otherwise
  // the dump conventions apply: "[removed]" bodies were moderator-removed,
  // "[deleted]" bodies or authors were deleted by the author.
  out.removed_by_moderator = j.value("removed_by_moderator", false);
  out.deleted_by_author = j.value("deleted_by_author", false);
  if (out.body == "[removed]") out.removed_by_moderator = true;
  if (out.body == "[deleted]" || out.author == kDeletedSentinel) {
    out.deleted_by_author = true;
  }
  return true;
}

}  // namespace

CommentStore::CommentStore(std::vector<Comment> comments, std::string year_tag)
    : comments_(std::move(comments)), year_tag_(std::move(year_tag)) {
  // Deterministic global order: community, then (created_utc, id).
  std::sort(comments_.begin(), comments_.end(),
            [](const Comment& a, const Comment& b) {
              if (a.community != b.community) return a.community < b.community;
              if (a.created_utc != b.created_utc) {
                return a.created_utc < b.created_utc;
              }
              return a.id < b.id;
            });
  by_id_.reserve(comments_.size());
  for (std::size_t i = 0; i < comments_.size(); ++i) {
    if (!by_id_.emplace(comments_[i].id, i).second) {
      throw Error(Errc::SchemaError,
                  "duplicate comment id: " + comments_[i].id);
    }
    by_community_[comments_[i].community].push_back(i);
  }
}

const Comment* CommentStore::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &comments_[it->second];
}

std::vector<std::string> CommentStore::communities() const {
  std::vector<std::string> names;
  names.reserve(by_community_.size());
  for (const auto& [name, _] : by_community_) names.push_back(name);
  return names;
}

std::vector<const Comment*> CommentStore::comments_in(
    const std::string& community) const {
  std::vector<const Comment*> out;
  auto it = by_community_.find(community);
  if (it == by_community_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t idx : it->second) out.push_back(&comments_[idx]);
  return out;
}

bool ExclusionLists::is_excluded(const std::string& community,
                                 const std::string& author) const {
  std::string key = to_lower(trim(author));
  if (bot_accounts.count(key) || global_moderators.count(key)) return true;
  auto it = moderator_accounts.find(community);
  return it != moderator_accounts.end() && it->second.count(key) > 0;
}

ExclusionLists ExclusionLists::load(const std::filesystem::path& bots_file,
                                    const std::filesystem::path& mods_file) {
  ExclusionLists excl;
  auto each_line = [](const std::filesystem::path& path, auto&& fn) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) {
      throw Error(Errc::FileUnreadable, "cannot open " + path.string());
    }
    std::string line;
    while (std::getline(in, line)) {
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      fn(t);
    }
  };
  each_line(bots_file, [&](const std::string& line) {
    excl.bot_accounts.insert(to_lower(line));
  });
  each_line(mods_file, [&](const std::string& line) {
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      excl.global_moderators.insert(to_lower(line));
    } else {
      std::string community = trim(line.substr(0, comma));
      std::string account = to_lower(trim(line.substr(comma + 1)));
      if (!account.empty()) excl.moderator_accounts[community].insert(account);
    }
  });
  return excl;
}

CommentStore load_corpus(const std::filesystem::path& path,
                         const std::string& year_tag, LoadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::FileUnreadable, "cannot open " + path.string());
  }
  std::vector<Comment> comments;
  std::unordered_set<std::string> seen_ids;
  std::size_t parsed = 0;
  std::size_t skipped = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    Comment c;
    if (parse_record(line, c) && seen_ids.insert(c.id).second) {
      comments.push_back(std::move(c));
      ++parsed;
    } else {
      ++skipped;
    }
  }
  std::size_t total = parsed + skipped;
  if (total > 0 && skipped * 2 > total) {
    throw Error(Errc::SchemaError,
                path.string() + ": " + std::to_string(skipped) + " of " +
                    std::to_string(total) +
                    " records failed to parse; wrong file?");
  }
  if (stats) {
    stats->parsed = parsed;
    stats->skipped = skipped;
  }
  return CommentStore(std::move(comments), year_tag);
}

CommentStore filter_eligible(const CommentStore& store,
                             const ExclusionLists& excl) {
  std::vector<Comment> kept;
  for (const Comment& c : store.all()) {
    if (c.removed_by_moderator || c.deleted_by_author) continue;
    if (c.author == kDeletedSentinel) continue;
    if (excl.is_excluded(c.community, c.author)) continue;
    kept.push_back(c);
  }
  return CommentStore(std::move(kept), store.year_tag());
}

std::string mask_usernames(const std::string& body) {
  // /u/name or u/name where name is word chars, digits, '-' or '_'. The
  // leading character guard keeps "you/..." and URL path segments intact.
  static const std::regex pattern(R"((^|[^A-Za-z0-9_/])/?u/[A-Za-z0-9_-]+)",
                                  std::regex::optimize);
  return std::regex_replace(body, pattern, "$1[NAME]");
}

std::optional<Comment> resolve_context(const CommentStore& store,
                                       const Comment& target) {
  if (target.parent_id.empty()) return std::nullopt;
  const Comment* parent = store.find(target.parent_id);
  if (!parent) return std::nullopt;
  return *parent;
}

void save_store(const CommentStore& store, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::FileUnreadable, "cannot write " + path.string());
  }
  for (const Comment& c : store.all()) {
    json j{{"id", c.id},
           {"parent_id", c.parent_id},
           {"link_id", c.link_id},
           {"community", c.community},
           {"author", c.author},
           {"body", c.body},
           {"score", c.score},
           {"created_utc", c.created_utc},
           {"removed_by_moderator", c.removed_by_moderator},
           {"deleted_by_author", c.deleted_by_author}};
    out << j.dump() << '\n';
  }
}

CommentStore load_store(const std::filesystem::path& path,
                        const std::string& year_tag) {
  // The normalized format is a strict subset of what load_corpus accepts.
  return load_corpus(path, year_tag);
}

}  // namespace commval
