#include "wikirank/pipeline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "wikirank/candidates.hpp"
#include "wikirank/graph.hpp"

namespace wikirank {

void parallel_for_each(std::size_t jobs, std::size_t n,
                       const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (jobs == 0) jobs = 1;
  jobs = std::min(jobs, n);

  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

PredictionRecord extract_document(const Document& doc,
                                  const ExtractionConfig& extraction,
                                  const PruneConfig& prune_config,
                                  const AnnotatorConfig& annotator) {
  const std::vector<CandidatePhrase> occurrences = extract_candidates(doc);
  const std::vector<Link> links =
      link_candidates(occurrences, doc.annotations, annotator.link_rule);
  const SemanticGraph full = build_graph(doc, occurrences, links);
  const SemanticGraph pruned = prune(full, prune_config);
  const KeyphraseSet selected = greedy_extract(pruned, extraction);

  PredictionRecord rec;
  rec.id = doc.id;
  rec.keyphrases = selected.phrases;
  rec.objective = selected.objective_value;
  rec.pruned_phrase_count = full.phrase_count() - pruned.phrase_count();
  return rec;
}

Document annotate_with_gazetteer(const Document& doc, const Gazetteer& gaz,
                                 const AnnotatorConfig& config) {
  Document out = doc;
  out.annotations = gazetteer_annotate(
      doc, gaz, config.confidence_threshold, config.max_anchor_tokens);
  return out;
}

}  // namespace wikirank
