#include "wikirank/annotate.hpp"

#include <unordered_set>

namespace wikirank {

std::vector<Link> link_candidates(
    const std::vector<CandidatePhrase>& candidates,
    const std::vector<ConceptAnnotation>& annotations, OverlapRule rule) {
  std::vector<Link> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const CandidatePhrase& c = candidates[i];
    std::unordered_set<std::string> seen;
    for (const ConceptAnnotation& a : annotations) {
      const bool hit =
          rule == OverlapRule::kOverlap
              ? (c.start < a.end && a.start < c.end)
              : (a.start >= c.start && a.end <= c.end);
      if (hit && seen.insert(a.title).second) {
        out.push_back(Link{i, a.title});
      }
    }
  }
  return out;
}

}  // namespace wikirank
