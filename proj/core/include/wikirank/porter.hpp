#ifndef WIKIRANK_PORTER_HPP
#define WIKIRANK_PORTER_HPP

#include <string>
#include <string_view>

namespace wikirank {

// Porter's 1980 suffix-stripping algorithm for English, as published.
// Input is ASCII-lowercased first; bytes outside a-z pass through untouched.
std::string porter_stem(std::string_view word);

}  // namespace wikirank

#endif  // WIKIRANK_PORTER_HPP
