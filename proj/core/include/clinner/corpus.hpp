#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "clinner/label.hpp"

namespace clinner {

/// The unit of evaluation: raw text plus a stable identifier.
struct Document {
  std::string id;
  std::string text;  // UTF-8
  std::string source_dataset;
};

/// A character-offset interval carrying one standardized label. Offsets are
/// counted in Unicode scalar values, 0-based, end exclusive.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  StandardLabel label = StandardLabel::Condition;

  std::size_t length() const { return end - start; }
  bool overlaps(const EntitySpan& other) const {
    return start < other.end && other.start < end;
  }
  /// Number of shared character positions.
  std::size_t overlap(const EntitySpan& other) const {
    const std::size_t lo = std::max(start, other.start);
    const std::size_t hi = std::min(end, other.end);
    return hi > lo ? hi - lo : 0;
  }
  bool same_boundary(const EntitySpan& other) const {
    return start == other.start && end == other.end;
  }

  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

struct DatasetManifest {
  std::string name;
  LabelSet entity_whitelist;
  std::size_t document_count = 0;
  std::size_t annotation_count = 0;
};

struct AnnotatedDocument {
  Document document;
  std::vector<EntitySpan> gold_spans;
};

DatasetManifest load_manifest(const std::filesystem::path& path);

/// Loads a normalized JSON-lines dataset. One document per line:
///   {"id": str, "text": str, "entities": [{"start": int, "end": int,
///    "label": str}]}
/// Gold labels outside the manifest whitelist are a hard error (a corpus
/// preparation bug), as are out-of-bounds spans, duplicate ids, and
/// malformed lines (reported with their line number).
std::vector<AnnotatedDocument> load_dataset(const std::filesystem::path& path,
                                            const DatasetManifest& manifest);

/// Writes documents in the same JSON-lines format, atomically
/// (temp file + rename). load_dataset(save_dataset(x)) == x.
void save_dataset(const std::filesystem::path& path,
                  std::span<const AnnotatedDocument> docs);

/// Keeps only spans whose label is whitelisted. Order preserved; the input
/// is not modified. Predicted labels outside the whitelist are excluded
/// from scoring rather than treated as errors.
std::vector<EntitySpan> filter_predictions_to_whitelist(
    const std::vector<EntitySpan>& preds, const DatasetManifest& manifest);

struct Violation {
  std::string document_id;
  std::optional<std::size_t> span_index;
  std::string rule;  // "empty_id", "empty_text", "duplicate_id",
                     // "span_bounds", "label_whitelist"
  std::string detail;
};

/// Checks every corpus invariant and reports violations as data; an empty
/// report means the corpus is well-formed.
std::vector<Violation> validate_corpus(std::span<const AnnotatedDocument> docs,
                                       const DatasetManifest& manifest);

/// Predictions in the normalized format, keyed by document id.
using PredictionMap =
    std::unordered_map<std::string, std::vector<EntitySpan>>;

/// Loads a predictions file (same JSON-lines shape as a dataset). Spans are
/// bounds-checked against the gold documents; labels outside the whitelist
/// are silently filtered; ids not present in the gold set are an error.
/// The "text" field is optional but must match the gold text when present.
PredictionMap load_predictions(const std::filesystem::path& path,
                               const DatasetManifest& manifest,
                               std::span<const AnnotatedDocument> gold);

}  // namespace clinner
