#pragma once

#include <cstddef>
#include <functional>

#include "wikirank/annotate.hpp"
#include "wikirank/corpus.hpp"
#include "wikirank/eval.hpp"
#include "wikirank/gazetteer.hpp"
#include "wikirank/optimize.hpp"

namespace wikirank {

// Runs fn(0) .. fn(n-1) on up to jobs worker threads. Indices are handed
// out through a shared counter, so callers must write results into
// per-index slots to keep output deterministic. The first exception thrown
// by any worker is rethrown after all workers finish.
void parallel_for_each(std::size_t jobs, std::size_t n,
                       const std::function<void(std::size_t)>& fn);

// Candidate extraction, concept linking, graph construction, pruning and
// greedy selection for one document. The document must already carry tokens
// and annotations.
PredictionRecord extract_document(const Document& doc,
                                  const ExtractionConfig& extraction,
                                  const PruneConfig& prune_config,
                                  const AnnotatorConfig& annotator);

// Returns a copy of doc with annotations produced by the offline gazetteer.
// Existing annotations are replaced.
Document annotate_with_gazetteer(const Document& doc, const Gazetteer& gaz,
                                 const AnnotatorConfig& config);

}  // namespace wikirank
