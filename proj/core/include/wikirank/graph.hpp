#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wikirank/annotate.hpp"
#include "wikirank/candidates.hpp"
#include "wikirank/corpus.hpp"

namespace wikirank {

struct PhraseNode {
  std::string normalized;
  std::string display;           // earliest surface form
  std::size_t first_offset = 0;  // code point offset of earliest occurrence
  std::vector<std::size_t> concepts;  // adjacent concept ids, sorted
};

struct ConceptNode {
  std::string title;
  double weight = 0.0;                // document-wide annotation count
  std::vector<std::size_t> phrases;   // adjacent phrase ids, sorted
};

// Bipartite graph between candidate phrases (grouped by normalized form) and
// concepts. Node ids are indices into the respective vectors. Edges are
// deduplicated and mirrored on both sides.
class SemanticGraph {
 public:
  std::size_t add_phrase(std::string normalized, std::string display,
                         std::size_t first_offset);
  std::size_t add_concept(std::string title, double weight);

  // Inserts the edge on both adjacency lists, keeping them sorted. A
  // duplicate insert is a no-op. Throws ValidationError on out-of-range ids.
  void add_edge(std::size_t phrase, std::size_t concept_id);

  const std::vector<PhraseNode>& phrases() const { return phrases_; }
  const std::vector<ConceptNode>& concepts() const { return concepts_; }
  std::size_t phrase_count() const { return phrases_.size(); }
  std::size_t concept_count() const { return concepts_.size(); }

  // Incident edge counts. Throw ValidationError on out-of-range ids.
  std::size_t phrase_degree(std::size_t phrase) const;
  std::size_t concept_degree(std::size_t concept_id) const;

  // Count of edges from concept into the selected phrase subset; selected
  // is a bitmask over phrase ids. This is deg within the induced subgraph.
  std::size_t concept_degree_within(std::size_t concept_id,
                                    const std::vector<bool>& selected) const;

 private:
  std::vector<PhraseNode> phrases_;
  std::vector<ConceptNode> concepts_;
};

// Assembles the graph for one document. Phrase nodes are the unique
// normalized candidate forms in first-occurrence order; concept nodes are
// the distinct titles in doc.annotations, in first-annotation order, and
// stay in the graph even when no link reaches them. A concept's weight
// counts every annotation of that title in the document, not just the ones
// that produced links.
SemanticGraph build_graph(const Document& doc,
                          const std::vector<CandidatePhrase>& occurrences,
                          const std::vector<Link>& links);

// Stable JSON rendering of the graph (phrases, concepts, edge lists).
std::string graph_to_json(const SemanticGraph& g);

// Graphviz rendering for eyeballing small graphs.
std::string graph_to_dot(const SemanticGraph& g);

}  // namespace wikirank
