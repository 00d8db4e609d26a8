#pragma once

// Run manifest: the reproducibility record written next to every pipeline
// output. Rerunning a stage with matching inputs must reproduce its outputs
// byte-identically, so the manifest stores content digests, never timestamps.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace commval {

struct StageRecord {
  std::map<std::string, std::string> inputs;   // label -> sha256
  std::map<std::string, std::string> outputs;  // filename -> sha256
  std::string status;  // "ok", "failed: ...", or a notice
};

struct RunManifest {
  std::string tool_version;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string year_tag;
  std::string model_id;
  std::string template_digest;
  std::string prng;
  std::map<std::string, StageRecord> stages;
  bool complete = false;

  void save(const std::filesystem::path& path) const;
  static RunManifest load(const std::filesystem::path& path);
};

}  // namespace commval
