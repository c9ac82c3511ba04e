#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wikirank/corpus.hpp"

namespace wikirank {

// Produces POS-tagged tokens for raw text. Offsets are code point positions.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<Token> tag(const std::string& text) const = 0;
};

// Heuristic tagger for untagged input. Splits on whitespace, detaches
// leading/trailing ASCII punctuation and possessive 's as separate tokens,
// then assigns tags from a closed-class word list plus suffix rules,
// defaulting to NN. Not a real tagger; documents with pre-tagged tokens
// bypass it entirely.
class FallbackTagger : public Tagger {
 public:
  std::vector<Token> tag(const std::string& text) const override;
};

std::unique_ptr<Tagger> make_fallback_tagger();

}  // namespace wikirank
