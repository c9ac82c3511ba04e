#include "wikirank/tagger.hpp"

#include <cctype>
#include <string_view>
#include <unordered_map>

#include "wikirank/text.hpp"

namespace wikirank {
namespace {

// Minimal closed-class table. This tagger exists so raw text can flow
// through the pipeline at all; pre-tagged input is the reference path.
const std::unordered_map<std::string_view, std::string_view>& word_tags() {
  static const std::unordered_map<std::string_view, std::string_view> table{
      {"the", "DT"},    {"a", "DT"},      {"an", "DT"},     {"this", "DT"},
      {"that", "DT"},   {"these", "DT"},  {"those", "DT"},  {"some", "DT"},
      {"any", "DT"},    {"each", "DT"},   {"every", "DT"},  {"no", "DT"},
      {"all", "DT"},    {"both", "DT"},   {"another", "DT"},
      {"of", "IN"},     {"in", "IN"},     {"on", "IN"},     {"at", "IN"},
      {"by", "IN"},     {"for", "IN"},    {"with", "IN"},   {"from", "IN"},
      {"into", "IN"},   {"over", "IN"},   {"under", "IN"},  {"about", "IN"},
      {"after", "IN"},  {"before", "IN"}, {"between", "IN"},
      {"during", "IN"}, {"against", "IN"}, {"through", "IN"},
      {"since", "IN"},  {"until", "IN"},  {"as", "IN"},     {"than", "IN"},
      {"because", "IN"},
      {"to", "TO"},
      {"and", "CC"},    {"or", "CC"},     {"but", "CC"},    {"nor", "CC"},
      {"i", "PRP"},     {"you", "PRP"},   {"he", "PRP"},    {"she", "PRP"},
      {"it", "PRP"},    {"we", "PRP"},    {"they", "PRP"},  {"me", "PRP"},
      {"him", "PRP"},   {"her", "PRP"},   {"us", "PRP"},    {"them", "PRP"},
      {"my", "PRP$"},   {"your", "PRP$"}, {"his", "PRP$"},  {"its", "PRP$"},
      {"our", "PRP$"},  {"their", "PRP$"},
      {"can", "MD"},    {"could", "MD"},  {"may", "MD"},    {"might", "MD"},
      {"must", "MD"},   {"shall", "MD"},  {"should", "MD"}, {"will", "MD"},
      {"would", "MD"},
      {"is", "VBZ"},    {"are", "VBP"},   {"was", "VBD"},   {"were", "VBD"},
      {"be", "VB"},     {"been", "VBN"},  {"being", "VBG"}, {"am", "VBP"},
      {"has", "VBZ"},   {"have", "VBP"},  {"had", "VBD"},   {"do", "VBP"},
      {"does", "VBZ"},  {"did", "VBD"},
      {"not", "RB"},    {"very", "RB"},   {"too", "RB"},    {"also", "RB"},
      {"now", "RB"},    {"then", "RB"},   {"here", "RB"},   {"there", "RB"},
      {"never", "RB"},  {"always", "RB"}, {"still", "RB"},  {"just", "RB"},
      {"already", "RB"},
      {"which", "WDT"}, {"who", "WP"},    {"whom", "WP"},   {"whose", "WP$"},
      {"what", "WP"},   {"when", "WRB"},  {"where", "WRB"}, {"why", "WRB"},
      {"how", "WRB"},
  };
  return table;
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

bool all_digits_like(std::string_view w) {
  bool digit_seen = false;
  for (char c : w) {
    if (c >= '0' && c <= '9') {
      digit_seen = true;
    } else if (c != ',' && c != '.' && c != '-' && c != '%') {
      return false;
    }
  }
  return digit_seen;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

std::string guess_tag(std::string_view word) {
  const std::string lower = ascii_lower(word);
  if (auto it = word_tags().find(std::string_view(lower));
      it != word_tags().end()) {
    return std::string(it->second);
  }
  if (all_digits_like(lower)) return "CD";
  const bool capitalized = !word.empty() && word[0] >= 'A' && word[0] <= 'Z';
  if (capitalized) {
    return ends_with(lower, "s") && !ends_with(lower, "ss") ? "NNPS" : "NNP";
  }
  if (ends_with(lower, "ly")) return "RB";
  if (lower.size() > 4 && ends_with(lower, "ing")) return "VBG";
  if (lower.size() > 3 && ends_with(lower, "ed")) return "VBD";
  if (ends_with(lower, "able") || ends_with(lower, "ible") ||
      ends_with(lower, "ous") || ends_with(lower, "ful") ||
      ends_with(lower, "ive") || ends_with(lower, "less") ||
      ends_with(lower, "al") || ends_with(lower, "ic")) {
    return "JJ";
  }
  if (ends_with(lower, "s") && !ends_with(lower, "ss")) return "NNS";
  return "NN";
}

}  // namespace

std::vector<Token> FallbackTagger::tag(const std::string& text) const {
  std::vector<Token> out;
  const Utf8Index index(text);
  const std::size_t n = index.size();

  auto emit = [&](std::size_t start, std::size_t end, std::string tag) {
    Token t;
    t.surface = std::string(index.slice(start, end));
    t.pos = std::move(tag);
    t.start = start;
    t.end = end;
    out.push_back(std::move(t));
  };

  // True for single-byte (ASCII) code points only; multi-byte code points
  // are treated as word characters.
  auto ascii_at = [&](std::size_t cp) -> char {
    const std::string_view s = index.slice(cp, cp + 1);
    return s.size() == 1 ? s[0] : '\0';
  };

  std::size_t i = 0;
  while (i < n) {
    const char c = ascii_at(i);
    if (c != '\0' && is_ascii_space(c)) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n) {
      const char rc = ascii_at(run_end);
      if (rc != '\0' && is_ascii_space(rc)) break;
      ++run_end;
    }

    // Detach leading and trailing punctuation as their own tokens, keeping
    // word-internal hyphens and apostrophes intact.
    std::size_t core_begin = i;
    while (core_begin < run_end) {
      const char pc = ascii_at(core_begin);
      if (pc == '\0' || !is_ascii_punct(pc)) break;
      ++core_begin;
    }
    std::size_t core_end = run_end;
    while (core_end > core_begin) {
      const char pc = ascii_at(core_end - 1);
      if (pc == '\0' || !is_ascii_punct(pc)) break;
      --core_end;
    }

    for (std::size_t p = i; p < core_begin; ++p) {
      emit(p, p + 1, std::string(index.slice(p, p + 1)));
    }
    if (core_begin < core_end) {
      // Possessive 's becomes a separate POS token, Treebank style.
      const std::string_view core = index.slice(core_begin, core_end);
      const bool possessive =
          core.size() > 2 && ends_with(core, "'s");
      const std::size_t word_end = possessive ? core_end - 2 : core_end;
      emit(core_begin, word_end,
           guess_tag(index.slice(core_begin, word_end)));
      if (possessive) emit(word_end, core_end, "POS");
    }
    for (std::size_t p = core_end; p < run_end; ++p) {
      emit(p, p + 1, std::string(index.slice(p, p + 1)));
    }
    i = run_end;
  }
  return out;
}

std::unique_ptr<Tagger> make_fallback_tagger() {
  return std::make_unique<FallbackTagger>();
}

}  // namespace wikirank
