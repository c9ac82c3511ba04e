#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wikirank/graph.hpp"

namespace wikirank {

enum class TieBreak {
  kFirstOccurrence,  // earlier first offset wins, then normalized form
  kLexicographic,    // normalized form only
};

struct ExtractionConfig {
  std::size_t k = 10;
  TieBreak tie_break = TieBreak::kFirstOccurrence;
  bool pad_to_k = false;  // keep selecting zero-gain phrases up to k
};

struct PruneConfig {
  bool step1 = true;  // drop phrases with no concepts
  bool step2 = true;  // drop phrases whose only concept has weight 1
  bool step3 = true;  // cap phrases per concept at m
  std::size_t m = 3;
};

struct PruneStats {
  std::size_t removed_step1 = 0;
  std::size_t removed_step2 = 0;
  std::size_t removed_step3 = 0;
};

// Score one concept covered by d selected phrases: the first covering
// phrase contributes the full weight and each further one contributes half
// of the previous, so the score is 0 for d == 0 and w * (2 - 2^(1-d))
// otherwise.
double concept_score(double weight, std::size_t degree);

// Total objective for a selected phrase set: the sum of concept_score over
// all concepts, where each concept's degree counts its adjacent selected
// phrases. Duplicate ids in selected are an error.
double objective(const SemanticGraph& g,
                 const std::vector<std::size_t>& selected);

struct KeyphraseSet {
  std::vector<std::size_t> phrase_ids;  // in selection order
  std::vector<std::string> phrases;     // display forms, same order
  double objective_value = 0.0;
};

// Greedy maximization: repeatedly pick the unselected phrase with the
// largest marginal gain under the current (halved) concept weights, then
// halve the weights of its adjacent concepts. Stops early once the best
// gain is zero unless pad_to_k is set. Ties break per config.
KeyphraseSet greedy_extract(const SemanticGraph& g,
                            const ExtractionConfig& config);

// Exact optimum by enumerating every subset of size <= k. Refuses graphs
// with more than 20 phrases. Among maximizers, returns the one whose sorted
// id list is lexicographically smallest; phrase_ids come back sorted.
KeyphraseSet brute_force_extract(const SemanticGraph& g, std::size_t k);

// Applies the enabled pruning steps in order (1, 2, 3) to a copy of the
// graph. Phrase nodes are removed; concept weights are never altered.
// Concepts left without any adjacent phrase are dropped. Step 3 keeps, for
// each concept with more than m adjacent phrases, the m best by greedy-style
// standalone gain (ties by earlier first offset) and removes the rest that
// have no other concept.
SemanticGraph prune(const SemanticGraph& g, const PruneConfig& config,
                    PruneStats* stats = nullptr);

}  // namespace wikirank
