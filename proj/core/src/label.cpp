#include "clinner/label.hpp"

#include <algorithm>
#include <cctype>

namespace clinner {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view label_token(StandardLabel l) {
  switch (l) {
    case StandardLabel::Condition: return "condition";
    case StandardLabel::Procedure: return "procedure";
    case StandardLabel::Drug: return "drug";
    case StandardLabel::Measurement: return "measurement";
    case StandardLabel::Gene: return "gene";
    case StandardLabel::GeneVariant: return "gene_variant";
  }
  return "condition";
}

std::string_view label_tag(StandardLabel l) {
  switch (l) {
    case StandardLabel::Condition: return "DIS";
    case StandardLabel::Procedure: return "PROC";
    case StandardLabel::Drug: return "DRUG";
    case StandardLabel::Measurement: return "LAB";
    case StandardLabel::Gene: return "GENE";
    case StandardLabel::GeneVariant: return "GENEVAR";
  }
  return "DIS";
}

std::string_view label_display(StandardLabel l) {
  switch (l) {
    case StandardLabel::Condition: return "Condition";
    case StandardLabel::Procedure: return "Procedure";
    case StandardLabel::Drug: return "Drug";
    case StandardLabel::Measurement: return "Measurement";
    case StandardLabel::Gene: return "Gene";
    case StandardLabel::GeneVariant: return "Gene Variant";
  }
  return "Condition";
}

std::optional<StandardLabel> parse_label_token(std::string_view token) {
  for (auto l : kAllLabels) {
    if (token == label_token(l)) return l;
  }
  return std::nullopt;
}

std::optional<StandardLabel> parse_label_tag(std::string_view tag) {
  const std::string t = lower(tag);
  for (auto l : kAllLabels) {
    if (t == lower(label_tag(l)) || t == label_token(l)) return l;
  }
  return std::nullopt;
}

}  // namespace clinner
