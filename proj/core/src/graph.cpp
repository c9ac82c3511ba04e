#include "wikirank/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "wikirank/errors.hpp"

namespace wikirank {
namespace {

using ordered_json = nlohmann::ordered_json;

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::size_t SemanticGraph::add_phrase(std::string normalized,
                                      std::string display,
                                      std::size_t first_offset) {
  PhraseNode node;
  node.normalized = std::move(normalized);
  node.display = std::move(display);
  node.first_offset = first_offset;
  phrases_.push_back(std::move(node));
  return phrases_.size() - 1;
}

std::size_t SemanticGraph::add_concept(std::string title, double weight) {
  ConceptNode node;
  node.title = std::move(title);
  node.weight = weight;
  concepts_.push_back(std::move(node));
  return concepts_.size() - 1;
}

void SemanticGraph::add_edge(std::size_t phrase, std::size_t concept_id) {
  if (phrase >= phrases_.size() || concept_id >= concepts_.size()) {
    std::ostringstream msg;
    msg << "edge (" << phrase << ", " << concept_id
        << ") references a missing node";
    throw ValidationError(msg.str());
  }
  insert_sorted(phrases_[phrase].concepts, concept_id);
  insert_sorted(concepts_[concept_id].phrases, phrase);
}

std::size_t SemanticGraph::phrase_degree(std::size_t phrase) const {
  if (phrase >= phrases_.size()) {
    throw ValidationError("unknown phrase node id");
  }
  return phrases_[phrase].concepts.size();
}

std::size_t SemanticGraph::concept_degree(std::size_t concept_id) const {
  if (concept_id >= concepts_.size()) {
    throw ValidationError("unknown concept node id");
  }
  return concepts_[concept_id].phrases.size();
}

std::size_t SemanticGraph::concept_degree_within(
    std::size_t concept_id, const std::vector<bool>& selected) const {
  if (concept_id >= concepts_.size()) {
    throw ValidationError("unknown concept node id");
  }
  std::size_t d = 0;
  for (std::size_t p : concepts_[concept_id].phrases) {
    if (p < selected.size() && selected[p]) ++d;
  }
  return d;
}

SemanticGraph build_graph(const Document& doc,
                          const std::vector<CandidatePhrase>& occurrences,
                          const std::vector<Link>& links) {
  SemanticGraph g;

  const std::vector<CandidateGroup> groups = unique_candidates(occurrences);
  std::vector<std::size_t> occurrence_to_phrase(occurrences.size(), 0);
  for (const CandidateGroup& group : groups) {
    const std::size_t id =
        g.add_phrase(group.normalized, group.display, group.first_offset);
    for (std::size_t occ : group.occurrence_indices) {
      occurrence_to_phrase[occ] = id;
    }
  }

  // Every annotated concept becomes a node, linked or not; weight counts
  // annotations of the title across the whole document. Nodes appear in
  // first-annotation order.
  std::unordered_map<std::string, double> counts;
  for (const ConceptAnnotation& a : doc.annotations) counts[a.title] += 1.0;
  std::unordered_map<std::string, std::size_t> title_to_concept;
  for (const ConceptAnnotation& a : doc.annotations) {
    if (title_to_concept.find(a.title) == title_to_concept.end()) {
      title_to_concept.emplace(a.title,
                               g.add_concept(a.title, counts[a.title]));
    }
  }

  for (const Link& link : links) {
    const auto it = title_to_concept.find(link.title);
    if (it == title_to_concept.end()) {
      throw ValidationError("link references concept '" + link.title +
                            "' absent from the document annotations");
    }
    g.add_edge(occurrence_to_phrase[link.candidate], it->second);
  }
  return g;
}

std::string graph_to_json(const SemanticGraph& g) {
  ordered_json j;
  j["phrases"] = ordered_json::array();
  for (std::size_t i = 0; i < g.phrase_count(); ++i) {
    const PhraseNode& p = g.phrases()[i];
    ordered_json pj;
    pj["id"] = i;
    pj["normalized"] = p.normalized;
    pj["display"] = p.display;
    pj["first_offset"] = p.first_offset;
    j["phrases"].push_back(std::move(pj));
  }
  j["concepts"] = ordered_json::array();
  for (std::size_t i = 0; i < g.concept_count(); ++i) {
    const ConceptNode& c = g.concepts()[i];
    ordered_json cj;
    cj["id"] = i;
    cj["concept"] = c.title;
    cj["weight"] = c.weight;
    j["concepts"].push_back(std::move(cj));
  }
  j["edges"] = ordered_json::array();
  for (std::size_t p = 0; p < g.phrase_count(); ++p) {
    for (std::size_t c : g.phrases()[p].concepts) {
      j["edges"].push_back(ordered_json::array({p, c}));
    }
  }
  return j.dump(2);
}

std::string graph_to_dot(const SemanticGraph& g) {
  std::ostringstream out;
  out << "graph semantic {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.phrase_count(); ++i) {
    out << "  p" << i << " [shape=box, label="
        << quote_dot(g.phrases()[i].display) << "];\n";
  }
  for (std::size_t i = 0; i < g.concept_count(); ++i) {
    std::ostringstream label;
    label << g.concepts()[i].title << " (" << g.concepts()[i].weight << ")";
    out << "  c" << i << " [shape=ellipse, label=" << quote_dot(label.str())
        << "];\n";
  }
  for (std::size_t p = 0; p < g.phrase_count(); ++p) {
    for (std::size_t c : g.phrases()[p].concepts) {
      out << "  p" << p << " -- c" << c << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace wikirank
