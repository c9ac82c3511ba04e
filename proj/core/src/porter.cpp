#include "wikirank/porter.hpp"

#include <array>
#include <cctype>

namespace wikirank {
namespace {

// A letter is a consonant if it is not a vowel, where 'y' counts as a vowel
// exactly when the preceding letter is a consonant ('y' at position 0 is a
// consonant).
bool is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// m in Porter's notation: the number of VC sequences in w[0, len).
std::size_t measure(const std::string& w, std::size_t len) {
  std::size_t m = 0;
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;  // leading consonants
  while (i < len) {
    while (i < len && !is_consonant(w, i)) ++i;  // vowel run
    if (i == len) break;
    while (i < len && is_consonant(w, i)) ++i;  // consonant run
    ++m;
  }
  return m;
}

bool contains_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

// *d: ends with a double consonant.
bool ends_double_consonant(const std::string& w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: w[0, len) ends consonant-vowel-consonant where the final consonant is
// not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) ||
      !is_consonant(w, len - 1)) {
    return false;
  }
  const char last = w[len - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Within a step, the longest matching suffix selects the rule; its condition
// then decides whether the rewrite happens. No other rule in the step fires.
template <std::size_t N>
void apply_rules(std::string& w, const std::array<Rule, N>& rules,
                 std::size_t min_measure) {
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if ((best == nullptr || r.suffix.size() > best->suffix.size()) &&
        ends_with(w, r.suffix)) {
      best = &r;
    }
  }
  if (best == nullptr) return;
  const std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) > min_measure) {
    w.replace(stem_len, best->suffix.size(), best->replacement);
  }
}

void step_1a(std::string& w) {
  if (w.empty() || w.back() != 's') return;
  if (ends_with(w, "sses")) {
    w.erase(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.erase(w.size() - 2);
  } else if (w.size() >= 2 && w[w.size() - 2] != 's') {
    w.pop_back();
  } else if (w.size() == 1) {
    w.pop_back();
  }
}

void step_1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.pop_back();
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) {
    w.erase(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) {
    w.erase(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w) && w.back() != 'l' && w.back() != 's' &&
             w.back() != 'z') {
    w.pop_back();
  } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
    w.push_back('e');
  }
}

void step_1c(std::string& w) {
  if (!w.empty() && w.back() == 'y' && contains_vowel(w, w.size() - 1)) {
    w.back() = 'i';
  }
}

void step_2(std::string& w) {
  static constexpr std::array<Rule, 20> rules{{
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  }};
  apply_rules(w, rules, 0);
}

void step_3(std::string& w) {
  static constexpr std::array<Rule, 7> rules{{
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  }};
  apply_rules(w, rules, 0);
}

void step_4(std::string& w) {
  static constexpr std::array<Rule, 19> rules{{
      {"al", ""},   {"ance", ""}, {"ence", ""},  {"er", ""},  {"ic", ""},
      {"able", ""}, {"ible", ""}, {"ant", ""},   {"ement", ""},
      {"ment", ""}, {"ent", ""},  {"ion", ""},   {"ou", ""},  {"ism", ""},
      {"ate", ""},  {"iti", ""},  {"ous", ""},   {"ive", ""}, {"ize", ""},
  }};
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if ((best == nullptr || r.suffix.size() > best->suffix.size()) &&
        ends_with(w, r.suffix)) {
      best = &r;
    }
  }
  if (best == nullptr) return;
  const std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) <= 1) return;
  if (best->suffix == "ion" && stem_len > 0 && w[stem_len - 1] != 's' &&
      w[stem_len - 1] != 't') {
    return;
  }
  w.erase(stem_len);
}

void step_5a(std::string& w) {
  if (w.empty() || w.back() != 'e') return;
  const std::size_t stem_len = w.size() - 1;
  const std::size_t m = measure(w, stem_len);
  if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.pop_back();
}

void step_5b(std::string& w) {
  if (measure(w, w.size()) > 1 && ends_double_consonant(w) &&
      w.back() == 'l') {
    w.pop_back();
  }
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w;
  w.reserve(word.size());
  for (char c : word) {
    w.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(c))));
  }
  if (w.empty()) return w;
  step_1a(w);
  step_1b(w);
  step_1c(w);
  step_2(w);
  step_3(w);
  step_4(w);
  step_5a(w);
  step_5b(w);
  return w;
}

}  // namespace wikirank
