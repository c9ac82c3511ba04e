#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wikirank/annotate.hpp"
#include "wikirank/corpus.hpp"

namespace wikirank {

// HTTP client for the TagMe entity annotation service. Requests go to
// {endpoint}/tag with text, lang=en and the gcube-token. Transport failures,
// 5xx and 429 responses are retried with exponential backoff up to
// retry_limit times; other 4xx responses raise ServiceError immediately.
//
// Text longer than max_text_chars is split at sentence boundaries, each
// chunk annotated separately and the returned offsets shifted back into the
// full-text coordinate space.
//
// When cache_dir is set, responses are cached on disk keyed by a digest of
// endpoint and text, and replayed on later calls without touching the
// network.
class TagmeClient {
 public:
  explicit TagmeClient(AnnotatorConfig config);
  ~TagmeClient();

  TagmeClient(const TagmeClient&) = delete;
  TagmeClient& operator=(const TagmeClient&) = delete;

  // Annotates one document text. Offsets in the result are code point
  // positions into text. Annotations are returned in document order.
  std::vector<ConceptAnnotation> annotate(const std::string& text) const;

  // Cache key for a request: hex SHA-256 over endpoint, a NUL byte and the
  // text. Exposed so tests can preseed the cache.
  static std::string cache_key(const std::string& endpoint,
                               const std::string& text);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Parses a raw TagMe JSON response body into annotations, applying the
// confidence threshold and adding offset_shift to the reported spans.
// Throws ParseError if the body is not the expected shape.
std::vector<ConceptAnnotation> parse_tagme_response(
    const std::string& body, double confidence_threshold,
    std::size_t offset_shift);

// Splits text into chunks no longer than max_chars code points, preferring
// sentence boundaries (. ! ? followed by whitespace) and falling back to
// whitespace, then to a hard cut. Returns (chunk, code point offset) pairs
// that concatenate back to the input.
std::vector<std::pair<std::string, std::size_t>> chunk_text(
    const std::string& text, std::size_t max_chars);

}  // namespace wikirank
