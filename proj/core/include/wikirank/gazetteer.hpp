#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "wikirank/corpus.hpp"

namespace wikirank {

struct GazetteerEntry {
  std::string title;
  double prior = 0.0;
};

// Offline anchor table mapping lowercased anchor text to a concept title
// with a link prior. File format is TSV: anchor<TAB>title<TAB>prior, with
// blank lines and lines starting with # skipped.
class Gazetteer {
 public:
  static Gazetteer load(const std::filesystem::path& path);

  void add(std::string anchor, GazetteerEntry entry);

  // Looks up an already-lowercased anchor key. Returns nullptr on miss.
  const GazetteerEntry* find(const std::string& anchor) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, GazetteerEntry> entries_;
};

// Matches gazetteer anchors against the document tokens: left to right,
// longest n-gram first (up to max_anchor_tokens), non-overlapping. The match
// key is the lowercased token surfaces joined with single spaces. Anchors
// whose prior is below threshold do not match at all, so a shorter n-gram at
// the same position still gets its chance. Returns annotations in document
// order with confidence set to the anchor prior.
std::vector<ConceptAnnotation> gazetteer_annotate(
    const Document& doc, const Gazetteer& gazetteer, double threshold,
    std::size_t max_anchor_tokens = 5);

}  // namespace wikirank
