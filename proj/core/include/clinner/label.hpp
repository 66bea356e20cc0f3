#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace clinner {

/// The six standardized clinical entity types. There is no Outside member;
/// a token outside every entity simply carries no label.
enum class StandardLabel : std::uint8_t {
  Condition = 0,
  Procedure,
  Drug,
  Measurement,
  Gene,
  GeneVariant,
};

inline constexpr std::size_t kLabelCount = 6;

inline constexpr std::array<StandardLabel, kLabelCount> kAllLabels = {
    StandardLabel::Condition,   StandardLabel::Procedure,
    StandardLabel::Drug,        StandardLabel::Measurement,
    StandardLabel::Gene,        StandardLabel::GeneVariant,
};

constexpr std::size_t label_index(StandardLabel l) {
  return static_cast<std::size_t>(l);
}

/// Lowercase token used in JSON files ("condition", ..., "gene_variant").
std::string_view label_token(StandardLabel l);

/// Short uppercase mnemonic used in BIO tags and CoNLL exports
/// (DIS, PROC, DRUG, LAB, GENE, GENEVAR).
std::string_view label_tag(StandardLabel l);

/// Human-readable name ("Condition", ..., "Gene Variant").
std::string_view label_display(StandardLabel l);

std::optional<StandardLabel> parse_label_token(std::string_view token);

/// Accepts either the tag mnemonic or the JSON token, case-insensitively.
std::optional<StandardLabel> parse_label_tag(std::string_view tag);

/// Small immutable-friendly set of StandardLabel, used for dataset
/// entity whitelists.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr LabelSet(std::initializer_list<StandardLabel> labels) {
    for (auto l : labels) insert(l);
  }

  constexpr void insert(StandardLabel l) {
    bits_ |= static_cast<std::uint8_t>(1u << label_index(l));
  }
  constexpr bool contains(StandardLabel l) const {
    return (bits_ & (1u << label_index(l))) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (auto l : kAllLabels) n += contains(l) ? 1 : 0;
    return n;
  }
  static constexpr LabelSet all() {
    LabelSet s;
    for (auto l : kAllLabels) s.insert(l);
    return s;
  }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

}  // namespace clinner
