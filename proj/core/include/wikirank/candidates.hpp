#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wikirank/corpus.hpp"

namespace wikirank {

// One candidate phrase occurrence: a maximal token run matching
// (JJ)*(NN|NNS|NNP|NNPS)+ with at least one noun.
struct CandidatePhrase {
  std::string surface;     // text slice covering the token run
  std::size_t start = 0;   // code point offset of the first token
  std::size_t end = 0;     // code point end of the last token, exclusive
  std::size_t first_token = 0;  // index into Document::tokens
  std::size_t last_token = 0;   // inclusive
  std::string normalized;  // normalize_phrase(surface)
};

// A group of occurrences sharing a normalized form.
struct CandidateGroup {
  std::string normalized;
  std::string display;          // surface of the earliest occurrence
  std::size_t first_offset = 0; // start of the earliest occurrence
  std::vector<std::size_t> occurrence_indices;  // into the occurrence list
};

// Scans the tagged tokens left to right and returns all maximal
// non-overlapping pattern matches in document order. The document must carry
// tokens; text offsets come from the token spans.
std::vector<CandidatePhrase> extract_candidates(const Document& doc);

// Groups occurrences by normalized form, ordered by first occurrence.
std::vector<CandidateGroup> unique_candidates(
    const std::vector<CandidatePhrase>& occurrences);

}  // namespace wikirank
