#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "wikirank/corpus.hpp"

namespace wikirank {

enum class MatchMode {
  kExact,    // case-insensitive, whitespace-collapsed comparison
  kStemmed,  // same, after stemming every token
};

// Output of the extraction stage for one document and input to evaluation.
struct PredictionRecord {
  std::string id;
  std::vector<std::string> keyphrases;  // ranked, best first
  double objective = 0.0;
  std::size_t pruned_phrase_count = 0;
};

PredictionRecord parse_prediction_record(const std::string& line);
std::string serialize_prediction(const PredictionRecord& rec);
std::vector<PredictionRecord> load_predictions(
    const std::filesystem::path& path);

bool match_phrase(const std::string& predicted, const std::string& gold,
                  MatchMode mode);

struct DocumentEval {
  std::string id;
  std::size_t num_predicted = 0;
  std::size_t num_gold = 0;
  std::size_t num_matched = 0;
  std::vector<std::string> matched;  // gold phrases claimed, in match order
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::vector<DocumentEval> per_document;  // scored documents, corpus order
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  std::size_t num_documents = 0;  // documents scored
  std::size_t num_skipped = 0;    // documents without gold keyphrases
};

// Scores predictions against the corpus gold keyphrases. Matching is greedy
// one-to-one in prediction order: each predicted phrase consumes the first
// unconsumed gold phrase it matches. Documents with empty gold are skipped;
// a scored document missing from predictions counts as zero predictions.
// Macro metrics average per-document scores; micro metrics pool the counts.
// A prediction record whose id is not in the corpus is an error.
EvalReport evaluate(const std::vector<PredictionRecord>& predictions,
                    const std::vector<Document>& corpus, MatchMode mode);

// Stable JSON rendering of a report.
std::string report_to_json(const EvalReport& report);

}  // namespace wikirank
