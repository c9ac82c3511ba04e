#include "wikirank/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wikirank/errors.hpp"

namespace wikirank {
namespace {

// Standalone greedy score of a phrase under the given concept weights.
double phrase_gain(const SemanticGraph& g, std::size_t phrase,
                   const std::vector<double>& weights) {
  double gain = 0.0;
  for (std::size_t c : g.phrases()[phrase].concepts) gain += weights[c];
  return gain;
}

// True if a should be selected over b on equal gain.
bool tie_wins(const SemanticGraph& g, std::size_t a, std::size_t b,
              TieBreak tie_break) {
  const PhraseNode& pa = g.phrases()[a];
  const PhraseNode& pb = g.phrases()[b];
  if (tie_break == TieBreak::kFirstOccurrence) {
    if (pa.first_offset != pb.first_offset) {
      return pa.first_offset < pb.first_offset;
    }
  }
  if (pa.normalized != pb.normalized) return pa.normalized < pb.normalized;
  return a < b;
}

}  // namespace

double concept_score(double weight, std::size_t degree) {
  if (degree == 0) return 0.0;
  // w * (2 - 2^(1-d)). Exact in binary floating point for integer weights.
  const int d = degree > 64 ? 64 : static_cast<int>(degree);
  return weight * (2.0 - std::ldexp(1.0, 1 - d));
}

double objective(const SemanticGraph& g,
                 const std::vector<std::size_t>& selected) {
  std::vector<bool> mask(g.phrase_count(), false);
  for (std::size_t id : selected) {
    if (id >= g.phrase_count()) {
      std::ostringstream msg;
      msg << "objective: unknown phrase id " << id;
      throw ValidationError(msg.str());
    }
    if (mask[id]) {
      std::ostringstream msg;
      msg << "objective: duplicate phrase id " << id;
      throw ValidationError(msg.str());
    }
    mask[id] = true;
  }
  double total = 0.0;
  for (std::size_t c = 0; c < g.concept_count(); ++c) {
    total += concept_score(g.concepts()[c].weight,
                           g.concept_degree_within(c, mask));
  }
  return total;
}

KeyphraseSet greedy_extract(const SemanticGraph& g,
                            const ExtractionConfig& config) {
  const std::size_t n = g.phrase_count();
  std::vector<double> weights;
  weights.reserve(g.concept_count());
  for (const ConceptNode& c : g.concepts()) weights.push_back(c.weight);

  KeyphraseSet result;
  std::vector<bool> selected(n, false);
  double accumulated = 0.0;

  while (result.phrase_ids.size() < config.k) {
    bool found = false;
    std::size_t best = 0;
    double best_gain = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      if (selected[p]) continue;
      const double gain = phrase_gain(g, p, weights);
      if (!found || gain > best_gain ||
          (gain == best_gain && tie_wins(g, p, best, config.tie_break))) {
        found = true;
        best = p;
        best_gain = gain;
      }
    }
    if (!found) break;  // every phrase already selected
    if (best_gain <= 0.0 && !config.pad_to_k) break;

    selected[best] = true;
    accumulated += best_gain;
    result.phrase_ids.push_back(best);
    result.phrases.push_back(g.phrases()[best].display);
    for (std::size_t c : g.phrases()[best].concepts) weights[c] *= 0.5;
  }

  result.objective_value = accumulated;

  // Cross-check the running total against a from-scratch evaluation; a
  // mismatch means the bookkeeping above is wrong.
  const double recomputed = objective(g, result.phrase_ids);
  const double tol = 1e-9 * std::max(1.0, std::abs(recomputed));
  if (std::abs(recomputed - accumulated) > tol) {
    std::ostringstream msg;
    msg << "greedy accounting mismatch: accumulated " << accumulated
        << " vs recomputed " << recomputed;
    throw Error(msg.str());
  }
  return result;
}

KeyphraseSet brute_force_extract(const SemanticGraph& g, std::size_t k) {
  const std::size_t n = g.phrase_count();
  if (n > 20) {
    std::ostringstream msg;
    msg << "brute force refuses " << n << " phrases (limit 20)";
    throw ValidationError(msg.str());
  }

  KeyphraseSet best;
  std::vector<std::size_t> ids;
  bool first = true;
  const std::size_t limit = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    ids.clear();
    for (std::size_t p = 0; p < n; ++p) {
      if (mask & (std::size_t{1} << p)) ids.push_back(p);
    }
    const double value = objective(g, ids);
    // Ties go to the lexicographically smallest sorted id list, which is
    // first-occurrence order since ids follow first occurrence.
    if (first || value > best.objective_value ||
        (value == best.objective_value && ids < best.phrase_ids)) {
      first = false;
      best.objective_value = value;
      best.phrase_ids = ids;
    }
  }

  best.phrases.clear();
  for (std::size_t id : best.phrase_ids) {
    best.phrases.push_back(g.phrases()[id].display);
  }
  return best;
}

SemanticGraph prune(const SemanticGraph& g, const PruneConfig& config,
                    PruneStats* stats) {
  const std::size_t n = g.phrase_count();
  std::vector<bool> alive(n, true);
  PruneStats local;

  if (config.step1) {
    for (std::size_t p = 0; p < n; ++p) {
      if (g.phrases()[p].concepts.empty()) {
        alive[p] = false;
        ++local.removed_step1;
      }
    }
  }

  if (config.step2) {
    for (std::size_t p = 0; p < n; ++p) {
      if (!alive[p]) continue;
      const auto& adj = g.phrases()[p].concepts;
      if (adj.size() == 1 && g.concepts()[adj[0]].weight == 1.0) {
        alive[p] = false;
        ++local.removed_step2;
      }
    }
  }

  if (config.step3) {
    // Original weights throughout; pruning never alters weights.
    std::vector<double> weights;
    weights.reserve(g.concept_count());
    for (const ConceptNode& c : g.concepts()) weights.push_back(c.weight);

    for (std::size_t c = 0; c < g.concept_count(); ++c) {
      std::vector<std::size_t> adj;
      for (std::size_t p : g.concepts()[c].phrases) {
        if (alive[p]) adj.push_back(p);
      }
      if (adj.size() <= config.m) continue;
      std::stable_sort(adj.begin(), adj.end(),
                       [&](std::size_t a, std::size_t b) {
                         const double ga = phrase_gain(g, a, weights);
                         const double gb = phrase_gain(g, b, weights);
                         if (ga != gb) return ga > gb;
                         return g.phrases()[a].first_offset <
                                g.phrases()[b].first_offset;
                       });
      for (std::size_t rank = config.m; rank < adj.size(); ++rank) {
        const std::size_t p = adj[rank];
        if (g.phrases()[p].concepts.size() == 1) {
          alive[p] = false;
          ++local.removed_step3;
        }
      }
    }
  }

  // Rebuild with surviving phrases and the concepts they still touch, both
  // in their original relative order.
  SemanticGraph out;
  std::vector<std::size_t> phrase_map(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (!alive[p]) continue;
    const PhraseNode& node = g.phrases()[p];
    phrase_map[p] = out.add_phrase(node.normalized, node.display,
                                   node.first_offset);
  }
  std::vector<std::size_t> concept_map(g.concept_count(), 0);
  std::vector<bool> concept_kept(g.concept_count(), false);
  for (std::size_t c = 0; c < g.concept_count(); ++c) {
    bool touched = false;
    for (std::size_t p : g.concepts()[c].phrases) {
      if (alive[p]) {
        touched = true;
        break;
      }
    }
    if (!touched) continue;
    concept_kept[c] = true;
    concept_map[c] =
        out.add_concept(g.concepts()[c].title, g.concepts()[c].weight);
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!alive[p]) continue;
    for (std::size_t c : g.phrases()[p].concepts) {
      if (concept_kept[c]) out.add_edge(phrase_map[p], concept_map[c]);
    }
  }

  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace wikirank
