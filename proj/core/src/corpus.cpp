#include "wikirank/corpus.hpp"

#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "wikirank/errors.hpp"
#include "wikirank/io.hpp"
#include "wikirank/text.hpp"

namespace wikirank {
namespace {

using ordered_json = nlohmann::ordered_json;

std::size_t get_offset(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    throw ParseError(std::string("field '") + key + "' is not an integer");
  }
  const auto n = v.get<long long>();
  if (n < 0) {
    throw ParseError(std::string("field '") + key + "' is negative");
  }
  return static_cast<std::size_t>(n);
}

void check_span(const std::string& doc_id, const char* what, std::size_t idx,
                std::size_t start, std::size_t end, std::size_t text_len) {
  if (start >= end) {
    std::ostringstream msg;
    msg << "document '" << doc_id << "': " << what << "[" << idx
        << "] has inverted or empty span [" << start << ", " << end << ")";
    throw ValidationError(msg.str());
  }
  if (end > text_len) {
    std::ostringstream msg;
    msg << "document '" << doc_id << "': " << what << "[" << idx
        << "] span end " << end << " exceeds text length " << text_len;
    throw ValidationError(msg.str());
  }
}

}  // namespace

void validate_document(const Document& doc) {
  const Utf8Index index(doc.text);
  const std::size_t text_len = index.size();

  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const Token& t = doc.tokens[i];
    check_span(doc.id, "tokens", i, t.start, t.end, text_len);
    if (i > 0 && t.start < prev_end) {
      std::ostringstream msg;
      msg << "document '" << doc.id << "': tokens[" << i
          << "] overlaps or precedes the previous token";
      throw ValidationError(msg.str());
    }
    prev_end = t.end;
    if (index.slice(t.start, t.end) != t.surface) {
      std::ostringstream msg;
      msg << "document '" << doc.id << "': tokens[" << i << "] surface \""
          << t.surface << "\" does not match the text slice";
      throw ValidationError(msg.str());
    }
  }

  for (std::size_t i = 0; i < doc.annotations.size(); ++i) {
    const ConceptAnnotation& a = doc.annotations[i];
    check_span(doc.id, "annotations", i, a.start, a.end, text_len);
    if (a.title.empty()) {
      std::ostringstream msg;
      msg << "document '" << doc.id << "': annotations[" << i
          << "] has an empty concept";
      throw ValidationError(msg.str());
    }
    if (a.confidence < 0.0 || a.confidence > 1.0) {
      std::ostringstream msg;
      msg << "document '" << doc.id << "': annotations[" << i
          << "] confidence " << a.confidence << " outside [0, 1]";
      throw ValidationError(msg.str());
    }
  }
}

Document parse_document_record(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << "malformed JSON at byte " << e.byte << ": " << e.what();
    throw ParseError(msg.str());
  }
  if (!j.is_object()) {
    throw ParseError("document record is not a JSON object");
  }

  Document doc;
  try {
    doc.id = j.at("id").get<std::string>();
    doc.text = j.at("text").get<std::string>();
    if (j.contains("tokens")) {
      for (const auto& tj : j.at("tokens")) {
        Token t;
        t.surface = tj.at("surface").get<std::string>();
        t.pos = tj.at("pos").get<std::string>();
        t.start = get_offset(tj, "start");
        t.end = get_offset(tj, "end");
        doc.tokens.push_back(std::move(t));
      }
    }
    if (j.contains("annotations")) {
      for (const auto& aj : j.at("annotations")) {
        ConceptAnnotation a;
        a.start = get_offset(aj, "start");
        a.end = get_offset(aj, "end");
        a.title = aj.at("concept").get<std::string>();
        a.confidence = aj.at("confidence").get<double>();
        doc.annotations.push_back(std::move(a));
      }
    }
    if (j.contains("gold")) {
      doc.gold = j.at("gold").get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad document record: ") + e.what());
  }

  validate_document(doc);
  return doc;
}

std::string serialize_document(const Document& doc) {
  ordered_json j;
  j["id"] = doc.id;
  j["text"] = doc.text;
  if (!doc.tokens.empty()) {
    ordered_json arr = ordered_json::array();
    for (const Token& t : doc.tokens) {
      ordered_json tj;
      tj["surface"] = t.surface;
      tj["pos"] = t.pos;
      tj["start"] = t.start;
      tj["end"] = t.end;
      arr.push_back(std::move(tj));
    }
    j["tokens"] = std::move(arr);
  }
  if (!doc.annotations.empty()) {
    ordered_json arr = ordered_json::array();
    for (const ConceptAnnotation& a : doc.annotations) {
      ordered_json aj;
      aj["start"] = a.start;
      aj["end"] = a.end;
      aj["concept"] = a.title;
      aj["confidence"] = a.confidence;
      arr.push_back(std::move(aj));
    }
    j["annotations"] = std::move(arr);
  }
  if (!doc.gold.empty()) {
    j["gold"] = doc.gold;
  }
  return j.dump();
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<Document> docs;
  std::unordered_set<std::string> seen_ids;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    const std::string line = content.substr(
        pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? content.size() + 1 : nl + 1;
    ++line_no;

    bool blank = true;
    for (char c : line) {
      if (!is_ascii_space(c)) {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    Document doc;
    try {
      doc = parse_document_record(line);
    } catch (const ValidationError& e) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": " << e.what();
      throw ValidationError(msg.str());
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": " << e.what();
      throw ParseError(msg.str());
    }
    if (!seen_ids.insert(doc.id).second) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": duplicate document id '"
          << doc.id << "'";
      throw ValidationError(msg.str());
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

void save_corpus(const std::vector<Document>& docs,
                 const std::filesystem::path& path) {
  std::string out;
  for (const Document& doc : docs) {
    out += serialize_document(doc);
    out.push_back('\n');
  }
  atomic_write_file(path, out);
}

}  // namespace wikirank
