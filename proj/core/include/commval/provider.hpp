#pragma once

// Pluggable language-model provider. Two implementations ship: an HTTP
// chat-completions client (credentials via environment variable) and a
// scripted deterministic mock for tests and offline runs.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace commval {

struct ProviderConfig {
  std::string provider_name = "mock";  // "http" or "mock"
  std::string model_id = "mock-model";
  double temperature = 0.0;
  double top_p = 1.0;
  int max_retries = 2;
  std::filesystem::path cache_path;

  // http provider
  std::string api_base;                       // e.g. https://api.example.com
  std::string api_key_env = "COMMVAL_API_KEY";
  int timeout_seconds = 120;

  // mock provider
  std::filesystem::path mock_script;

  // run-level knobs
  double failure_budget = 0.01;   // fraction of pairs allowed to fail
  std::size_t bank_render_budget = 0;  // max rendered bank chars, 0 = unlimited
  bool bank_per_community = false;

  void validate() const;  // throws Error{BadInput}
};

class Provider {
 public:
  virtual ~Provider() = default;
  // Returns the raw model response. Throws Error{ProviderUnavailable} on
  // transport failure.
  virtual std::string complete(const std::string& prompt) = 0;
  virtual std::string name() const = 0;
};

// POSTs {model, messages, temperature, top_p} to <api_base>/chat/completions
// and returns choices[0].message.content.
class HttpChatProvider : public Provider {
 public:
  explicit HttpChatProvider(const ProviderConfig& config);
  std::string complete(const std::string& prompt) override;
  std::string name() const override { return "http"; }

 private:
  ProviderConfig config_;
  std::string api_key_;
};

// Answers each prompt with the first script entry whose `match` substring
// occurs in the prompt and whose use budget (`times`, optional) is not
// exhausted. An entry without `match` is a catch-all.
class ScriptedMockProvider : public Provider {
 public:
  struct Entry {
    std::string match;     // empty = match everything
    std::string response;
    int times = -1;        // remaining uses; -1 = unlimited
  };

  explicit ScriptedMockProvider(std::vector<Entry> entries);
  // Script file: one JSON object per line {"match":..,"response":..,"times":..}.
  static ScriptedMockProvider from_file(const std::filesystem::path& path);

  std::string complete(const std::string& prompt) override;
  std::string name() const override { return "mock"; }

  std::size_t calls() const { return calls_; }

 private:
  std::vector<Entry> entries_;
  std::size_t calls_ = 0;
};

std::unique_ptr<Provider> make_provider(const ProviderConfig& config);

// Append-only response cache keyed by sha256(model_id, prompt).
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path path);

  static std::string key_for(const std::string& model_id,
                             const std::string& prompt);

  std::optional<std::string> find(const std::string& key) const;
  void put(const std::string& key, const std::string& raw_response);

  std::size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path path_;
  std::unordered_map<std::string, std::string> entries_;
};

}  // namespace commval
