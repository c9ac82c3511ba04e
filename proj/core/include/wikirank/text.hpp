#ifndef WIKIRANK_TEXT_HPP
#define WIKIRANK_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wikirank {

// Number of Unicode scalar values in a UTF-8 string. All character offsets
// in the document model count scalar values, not bytes.
std::size_t utf8_length(std::string_view text);

// Code-point index over a UTF-8 string, for O(1) offset-to-byte lookups.
// Holds a view; the indexed string must outlive the index.
class Utf8Index {
 public:
  explicit Utf8Index(std::string_view text);

  std::size_t size() const noexcept { return starts_.size(); }

  // Slice [start, end) in scalar-value offsets. Out-of-range offsets clamp.
  std::string_view slice(std::size_t start, std::size_t end) const;

  std::size_t byte_offset(std::size_t cp) const;

 private:
  std::string_view text_;
  std::vector<std::size_t> starts_;  // byte offset of each scalar value
};

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
std::string ascii_lower(std::string_view s);

// Collapses whitespace runs to single spaces and trims both ends.
std::string collapse_whitespace(std::string_view s);

// Canonical form used for phrase identity and evaluation matching:
// lowercase, collapse whitespace, trim, then Porter-stem every token.
std::string normalize_phrase(std::string_view phrase);

}  // namespace wikirank

#endif  // WIKIRANK_TEXT_HPP
