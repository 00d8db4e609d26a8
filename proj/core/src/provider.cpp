#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "commval/provider.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "commval/digest.hpp"
#include "commval/error.hpp"

namespace commval {

using nlohmann::json;

void ProviderConfig::validate() const {
  if (temperature < 0.0) {
    throw Error(Errc::BadInput, "temperature must be >= 0");
  }
  if (!(top_p > 0.0 && top_p <= 1.0)) {
    throw Error(Errc::BadInput, "top_p must be in (0,1]");
  }
  if (max_retries < 0) {
    throw Error(Errc::BadInput, "max_retries must be >= 0");
  }
  if (failure_budget < 0.0 || failure_budget > 1.0) {
    throw Error(Errc::BadInput, "failure_budget must be in [0,1]");
  }
  if (provider_name != "mock" && provider_name != "http") {
    throw Error(Errc::BadInput, "unknown provider: " + provider_name);
  }
  if (provider_name == "http" && api_base.empty()) {
    throw Error(Errc::BadInput, "http provider needs api_base");
  }
}

HttpChatProvider::HttpChatProvider(const ProviderConfig& config)
    : config_(config) {
  if (const char* key = std::getenv(config_.api_key_env.c_str())) {
    api_key_ = key;
  }
}

std::string HttpChatProvider::complete(const std::string& prompt) {
  json body{{"model", config_.model_id},
            {"messages", json::array({json{{"role", "user"},
                                           {"content", prompt}}})},
            {"temperature", config_.temperature},
            {"top_p", config_.top_p}};

  httplib::Client client(config_.api_base);
  client.set_connection_timeout(config_.timeout_seconds);
  client.set_read_timeout(config_.timeout_seconds);
  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }
  auto res = client.Post("/chat/completions", headers, body.dump(),
                         "application/json");
  if (!res) {
    throw Error(Errc::ProviderUnavailable,
                "no response from " + config_.api_base);
  }
  if (res->status != 200) {
    throw Error(Errc::ProviderUnavailable,
                "HTTP " + std::to_string(res->status) + " from " +
                    config_.api_base);
  }
  json parsed = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (!parsed.is_object() || !parsed.contains("choices") ||
      !parsed["choices"].is_array() || parsed["choices"].empty()) {
    throw Error(Errc::ProviderUnavailable, "malformed completion envelope");
  }
  const json& msg = parsed["choices"][0];
  if (msg.contains("message") && msg["message"].contains("content") &&
      msg["message"]["content"].is_string()) {
    return msg["message"]["content"].get<std::string>();
  }
  throw Error(Errc::ProviderUnavailable, "completion without content");
}

ScriptedMockProvider::ScriptedMockProvider(std::vector<Entry> entries)
    : entries_(std::move(entries)) {}

ScriptedMockProvider ScriptedMockProvider::from_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::FileUnreadable, "cannot open mock script " +
                                          path.string());
  }
  std::vector<Entry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || !j.contains("response") ||
        !j["response"].is_string()) {
      throw Error(Errc::SchemaError, "mock script line " +
                                         std::to_string(lineno) +
                                         ": need a response field");
    }
    Entry e;
    e.response = j["response"].get<std::string>();
    if (j.contains("match")) e.match = j["match"].get<std::string>();
    if (j.contains("times")) e.times = j["times"].get<int>();
    entries.push_back(std::move(e));
  }
  return ScriptedMockProvider(std::move(entries));
}

std::string ScriptedMockProvider::complete(const std::string& prompt) {
  ++calls_;
  for (Entry& e : entries_) {
    if (e.times == 0) continue;
    if (!e.match.empty() && prompt.find(e.match) == std::string::npos) {
      continue;
    }
    if (e.times > 0) --e.times;
    return e.response;
  }
  throw Error(Errc::ProviderUnavailable, "mock script has no matching entry");
}

std::unique_ptr<Provider> make_provider(const ProviderConfig& config) {
  config.validate();
  if (config.provider_name == "http") {
    return std::make_unique<HttpChatProvider>(config);
  }
  if (config.mock_script.empty()) {
    throw Error(Errc::BadInput, "mock provider needs mock_script");
  }
  return std::make_unique<ScriptedMockProvider>(
      ScriptedMockProvider::from_file(config.mock_script));
}

ResponseCache::ResponseCache(std::filesystem::path path)
    : path_(std::move(path)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // first run: the file appears on the first put
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || !j.contains("key") || !j.contains("response")) {
      continue;  // tolerate a torn trailing line from an interrupted run
    }
    entries_[j["key"].get<std::string>()] = j["response"].get<std::string>();
  }
}

std::string ResponseCache::key_for(const std::string& model_id,
                                   const std::string& prompt) {
  return digest::sha256_hex(model_id + "\n" + prompt);
}

std::optional<std::string> ResponseCache::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResponseCache::put(const std::string& key,
                        const std::string& raw_response) {
  if (!entries_.emplace(key, raw_response).second) return;  // already stored
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) {
    throw Error(Errc::FileUnreadable, "cannot append to cache " +
                                          path_.string());
  }
  out << json{{"key", key}, {"response", raw_response}}.dump() << '\n';
}

}  // namespace commval
