#pragma once

// Minimal RFC-4180-ish CSV support: quoted fields, embedded commas/quotes,
// and newlines inside quotes. Report files stay small enough that whole-file
// reads are fine.

#include <filesystem>
#include <string>
#include <vector>

namespace commval::csv {

std::string escape(const std::string& field);

std::string join_row(const std::vector<std::string>& fields);

// Parses one CSV document into rows of fields.
std::vector<std::vector<std::string>> parse(const std::string& text);

std::vector<std::vector<std::string>> read_file(
    const std::filesystem::path& path);

void write_file(const std::filesystem::path& path,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

// Fixed formatting for doubles in reports (shortest round-trip).
std::string fmt_double(double v);

}  // namespace commval::csv
