#include "wikirank/gazetteer.hpp"

#include <sstream>
#include <vector>

#include "wikirank/errors.hpp"
#include "wikirank/io.hpp"
#include "wikirank/text.hpp"

namespace wikirank {

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  Gazetteer gaz;

  std::size_t line_no = 0;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos
                               ? std::string::npos
                               : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no
          << ": expected anchor<TAB>title<TAB>prior";
      throw ParseError(msg.str());
    }
    const std::string anchor = ascii_lower(line.substr(0, t1));
    const std::string title = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string prior_text = line.substr(t2 + 1);

    double prior = 0.0;
    try {
      std::size_t used = 0;
      prior = std::stod(prior_text, &used);
      if (used != prior_text.size()) throw std::invalid_argument(prior_text);
    } catch (const std::exception&) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": bad prior '" << prior_text
          << "'";
      throw ParseError(msg.str());
    }
    if (anchor.empty() || title.empty() || prior < 0.0 || prior > 1.0) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no
          << ": anchor/title must be non-empty and prior in [0, 1]";
      throw ParseError(msg.str());
    }
    gaz.add(anchor, GazetteerEntry{title, prior});
  }
  return gaz;
}

void Gazetteer::add(std::string anchor, GazetteerEntry entry) {
  entries_[std::move(anchor)] = std::move(entry);
}

const GazetteerEntry* Gazetteer::find(const std::string& anchor) const {
  const auto it = entries_.find(anchor);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<ConceptAnnotation> gazetteer_annotate(
    const Document& doc, const Gazetteer& gazetteer, double threshold,
    std::size_t max_anchor_tokens) {
  std::vector<ConceptAnnotation> out;
  const auto& tokens = doc.tokens;
  if (max_anchor_tokens == 0) max_anchor_tokens = 1;

  // Lowercased surfaces, computed once.
  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  for (const Token& t : tokens) lower.push_back(ascii_lower(t.surface));

  std::size_t i = 0;
  while (i < tokens.size()) {
    bool matched = false;
    const std::size_t longest =
        std::min(max_anchor_tokens, tokens.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      std::string key = lower[i];
      for (std::size_t j = 1; j < len; ++j) {
        key.push_back(' ');
        key += lower[i + j];
      }
      const GazetteerEntry* entry = gazetteer.find(key);
      // An anchor below the threshold is a non-match so that a shorter
      // n-gram at the same position still gets considered.
      if (entry == nullptr || entry->prior < threshold) continue;
      ConceptAnnotation a;
      a.start = tokens[i].start;
      a.end = tokens[i + len - 1].end;
      a.title = entry->title;
      a.confidence = entry->prior;
      out.push_back(std::move(a));
      i += len;
      matched = true;
      break;
    }
    if (!matched) ++i;
  }
  return out;
}

}  // namespace wikirank
