#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace commval::digest {

// SHA-256, lowercase hex. Used for provider cache keys and manifest digests.
std::string sha256_hex(std::string_view data);

// Digest of a file's bytes. Throws Error{FileUnreadable}.
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace commval::digest
