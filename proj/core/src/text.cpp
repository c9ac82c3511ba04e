#include "wikirank/text.hpp"

#include <sstream>

#include "wikirank/errors.hpp"
#include "wikirank/porter.hpp"

namespace wikirank {
namespace {

// Returns the byte length of the UTF-8 sequence starting with lead byte b.
// Continuation and invalid lead bytes count as length 1 so that malformed
// input still round-trips without throwing.
std::size_t sequence_length(unsigned char b) {
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0) return 2;
  if ((b & 0xF0) == 0xE0) return 3;
  if ((b & 0xF8) == 0xF0) return 4;
  return 1;
}

}  // namespace

std::size_t utf8_length(std::string_view text) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    i += sequence_length(static_cast<unsigned char>(text[i]));
    if (i > text.size()) i = text.size();
    ++count;
  }
  return count;
}

Utf8Index::Utf8Index(std::string_view text) : text_(text) {
  std::size_t i = 0;
  while (i < text.size()) {
    starts_.push_back(i);
    i += sequence_length(static_cast<unsigned char>(text[i]));
    if (i > text.size()) i = text.size();
  }
}

std::size_t Utf8Index::byte_offset(std::size_t cp) const {
  if (cp >= starts_.size()) return text_.size();
  return starts_[cp];
}

std::string_view Utf8Index::slice(std::size_t start, std::size_t end) const {
  if (end > starts_.size()) end = starts_.size();
  if (start > end) start = end;
  const std::size_t b = byte_offset(start);
  const std::size_t e = byte_offset(end);
  return text_.substr(b, e - b);
}

std::string ascii_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    if (is_ascii_space(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

std::string normalize_phrase(std::string_view phrase) {
  const std::string collapsed = collapse_whitespace(ascii_lower(phrase));
  std::istringstream in(collapsed);
  std::string token;
  std::string out;
  while (in >> token) {
    if (!out.empty()) out.push_back(' ');
    out += porter_stem(token);
  }
  return out;
}

}  // namespace wikirank
