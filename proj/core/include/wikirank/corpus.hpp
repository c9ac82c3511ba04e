#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace wikirank {

// One whitespace-delimited token with its POS tag. Offsets are Unicode code
// point positions into Document::text, end exclusive.
struct Token {
  std::string surface;
  std::string pos;
  std::size_t start = 0;
  std::size_t end = 0;
};

// A linked concept occurrence. title is the Wikipedia article title; start
// and end are code point offsets of the mention, end exclusive.
struct ConceptAnnotation {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string title;
  double confidence = 0.0;
};

struct Document {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<ConceptAnnotation> annotations;
  std::vector<std::string> gold;  // author keyphrases, may be empty
};

// Parses one JSONL record. Unknown fields are ignored; missing optional
// arrays default to empty. Throws ParseError on malformed JSON or wrong
// field types.
Document parse_document_record(const std::string& line);

// Serializes a document to a single JSON line (no trailing newline). Field
// order is fixed so output is byte stable.
std::string serialize_document(const Document& doc);

// Checks offset sanity: token and annotation spans must satisfy
// start < end <= length(text) in code points, and tokens must be sorted by
// start and non-overlapping. Throws ValidationError with the document id and
// the offending span.
void validate_document(const Document& doc);

// Loads a JSONL corpus, validating every document. Document order is file
// order. Throws ParseError/ValidationError with the line number on failure.
std::vector<Document> load_corpus(const std::filesystem::path& path);

// Writes documents as JSONL via an atomic replace of the target file.
void save_corpus(const std::vector<Document>& docs,
                 const std::filesystem::path& path);

}  // namespace wikirank
