#pragma once

// Validation of extracted values against human annotations: nominal
// Krippendorff's alpha, label accuracy, and the seeded annotation sample.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commval/corpus.hpp"
#include "commval/extraction.hpp"

namespace commval {

enum class Judgment { Exhibited, NotExhibited, Missing };

struct AnnotationTable {
  // One item per (comment, value) pair.
  std::vector<std::pair<std::string, std::string>> items;
  std::vector<std::string> raters;
  // judgments[item][rater]
  std::vector<std::vector<Judgment>> judgments;
};

// Nominal Krippendorff's alpha from the coincidence matrix; items with fewer
// than two non-missing judgments are excluded per the standard treatment.
// Perfect agreement is exactly 1.0. Throws Error{InsufficientData} when
// fewer than two items remain or expected disagreement is zero without
// perfect agreement.
double krippendorff_alpha(const AnnotationTable& table);

// Fraction of items adjudicated as exhibited. resolution[i] corresponds to
// items[i]; Missing entries throw Error{UnadjudicatedItem}; an empty table
// throws Error{InsufficientData}.
double label_accuracy(const AnnotationTable& table,
                      std::span<const Judgment> resolution);

struct WorksheetRow {
  std::string comment_id;
  std::string community;
  std::string body;
  std::string value;
};

// Seeded uniform sample of per_community keyword-bearing comments per
// community, expanded to one row per (comment, extracted keyword).
// Communities with fewer records than requested contribute all of them plus
// a warning.
std::vector<WorksheetRow> sample_for_annotation(
    std::span<const ExtractionRecord> records, const CommentStore& store,
    int per_community, std::uint64_t seed,
    std::vector<std::string>* warnings = nullptr);

// Worksheet CSV: comment_id, community, body, value, rater_1, rater_2,
// resolution. Writing leaves the judgment columns blank for the annotators.
void save_worksheet(std::span<const WorksheetRow> rows,
                    const std::filesystem::path& path);

// Reads a filled worksheet. Accepts 1/0, yes/no, exhibited/not_exhibited
// (blank = missing). The resolution column, when present for every row, is
// returned for label_accuracy.
AnnotationTable load_annotation_table(
    const std::filesystem::path& path,
    std::vector<Judgment>* resolution_out = nullptr);

}  // namespace commval
