#include "wikirank/candidates.hpp"

#include <string_view>
#include <unordered_map>

#include "wikirank/text.hpp"

namespace wikirank {
namespace {

bool is_adjective(std::string_view pos) { return pos == "JJ"; }

bool is_noun(std::string_view pos) {
  return pos == "NN" || pos == "NNS" || pos == "NNP" || pos == "NNPS";
}

}  // namespace

std::vector<CandidatePhrase> extract_candidates(const Document& doc) {
  std::vector<CandidatePhrase> out;
  const Utf8Index index(doc.text);
  const auto& tokens = doc.tokens;

  std::size_t i = 0;
  while (i < tokens.size()) {
    // Longest run of adjectives, then nouns, starting here. The run is a
    // candidate only if it contains at least one noun.
    std::size_t j = i;
    while (j < tokens.size() && is_adjective(tokens[j].pos)) ++j;
    std::size_t noun_begin = j;
    while (j < tokens.size() && is_noun(tokens[j].pos)) ++j;
    if (j == noun_begin) {
      // No noun after the adjective run; no match can start inside the run
      // either, so resume after it.
      i = noun_begin == i ? i + 1 : noun_begin;
      continue;
    }
    CandidatePhrase c;
    c.first_token = i;
    c.last_token = j - 1;
    c.start = tokens[i].start;
    c.end = tokens[j - 1].end;
    c.surface = std::string(index.slice(c.start, c.end));
    c.normalized = normalize_phrase(c.surface);
    out.push_back(std::move(c));
    i = j;
  }
  return out;
}

std::vector<CandidateGroup> unique_candidates(
    const std::vector<CandidatePhrase>& occurrences) {
  std::vector<CandidateGroup> groups;
  std::unordered_map<std::string, std::size_t> by_form;
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    const CandidatePhrase& occ = occurrences[i];
    auto [it, inserted] = by_form.emplace(occ.normalized, groups.size());
    if (inserted) {
      CandidateGroup g;
      g.normalized = occ.normalized;
      g.display = occ.surface;
      g.first_offset = occ.start;
      groups.push_back(std::move(g));
    }
    groups[it->second].occurrence_indices.push_back(i);
  }
  return groups;
}

}  // namespace wikirank
