#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wikirank/candidates.hpp"
#include "wikirank/corpus.hpp"

namespace wikirank {

// How candidate spans and annotation spans must relate to produce a link.
enum class OverlapRule {
  kOverlap,      // any character overlap: a.start < b.end && b.start < a.end
  kContainment,  // annotation span lies fully inside the candidate span
};

enum class AnnotatorMode {
  kTagme,      // remote TagMe service
  kGazetteer,  // offline anchor table
};

struct AnnotatorConfig {
  AnnotatorMode mode = AnnotatorMode::kGazetteer;
  double confidence_threshold = 0.1;
  std::string tagme_endpoint = "https://tagme.d4science.org/tagme";
  std::string tagme_token;
  std::string gazetteer_path;
  std::size_t max_concurrent_requests = 4;
  int retry_limit = 3;
  int retry_initial_delay_ms = 500;
  std::size_t max_text_chars = 4000;
  std::size_t max_anchor_tokens = 5;
  OverlapRule link_rule = OverlapRule::kOverlap;
  std::string cache_dir;  // empty disables the response cache
};

// One candidate-occurrence/concept pairing.
struct Link {
  std::size_t candidate = 0;  // index into the occurrence list
  std::string title;
};

// Pairs candidate occurrences with concept annotations by span position
// under the given rule. Confidence filtering happens when annotations are
// produced, not here. At most one link per (occurrence, title) pair is
// emitted; output is ordered by candidate, then by annotation position.
std::vector<Link> link_candidates(
    const std::vector<CandidatePhrase>& candidates,
    const std::vector<ConceptAnnotation>& annotations, OverlapRule rule);

}  // namespace wikirank
