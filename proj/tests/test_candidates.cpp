#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "support/pattern_oracle.hpp"
#include "support/test_util.hpp"
#include "wikirank/candidates.hpp"
#include "wikirank/corpus.hpp"

using namespace wikirank;
using testutil::make_tagged_doc;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> spans(
    const std::vector<CandidatePhrase>& cands) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : cands) {
    out.emplace_back(c.first_token, c.last_token + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("a determiner-adjective-noun run yields one candidate") {
  const Document doc = make_tagged_doc("d", {{"the", "DT"},
                                             {"incurable", "JJ"},
                                             {"brain", "NN"},
                                             {"disease", "NN"}});
  const auto cands = extract_candidates(doc);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].surface == "incurable brain disease");
  CHECK(cands[0].first_token == 1);
  CHECK(cands[0].last_token == 3);
  CHECK(cands[0].start == 4);
  CHECK(cands[0].end == 27);
  CHECK(cands[0].normalized == "incur brain diseas");
}

TEST_CASE("adjectives without a following noun are skipped") {
  CHECK(extract_candidates(make_tagged_doc("d", {{"red", "JJ"}})).empty());
  CHECK(extract_candidates(
            make_tagged_doc("d", {{"red", "JJ"}, {"runs", "VBZ"}}))
            .empty());

  // The scan resumes at the breaker, not after it, so a later run still
  // gets found.
  const auto cands = extract_candidates(make_tagged_doc(
      "d", {{"red", "JJ"}, {"shiny", "JJ"}, {"runs", "VBZ"}, {"car", "NN"}}));
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].surface == "car");
}

TEST_CASE("comparative and superlative adjectives do not extend a run") {
  // Only the literal JJ tag participates; JJR/JJS break the pattern.
  const auto cands = extract_candidates(make_tagged_doc(
      "d", {{"older", "JJR"}, {"cattle", "NNS"}, {"best", "JJS"},
            {"beef", "NN"}}));
  REQUIRE(cands.size() == 2);
  CHECK(cands[0].surface == "cattle");
  CHECK(cands[1].surface == "beef");
}

TEST_CASE("all four noun tags participate") {
  const auto cands = extract_candidates(make_tagged_doc(
      "d", {{"British", "JJ"}, {"Isles", "NNP"}, {"peoples", "NNPS"},
            {"sheep", "NN"}, {"flocks", "NNS"}}));
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].surface == "British Isles peoples sheep flocks");
}

TEST_CASE("matches are maximal and never overlap") {
  const auto cands = extract_candidates(make_tagged_doc(
      "d", {{"farm", "NN"}, {"union", "NN"}, {"chief", "NN"}}));
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].first_token == 0);
  CHECK(cands[0].last_token == 2);
}

TEST_CASE("an interior adjective splits two noun runs") {
  const auto cands = extract_candidates(make_tagged_doc(
      "d", {{"Britain", "NNP"}, {"last", "JJ"}, {"year", "NN"}}));
  REQUIRE(cands.size() == 2);
  CHECK(cands[0].surface == "Britain");
  CHECK(cands[1].surface == "last year");
}

TEST_CASE("candidates on an empty or untagged document") {
  Document doc;
  doc.id = "empty";
  CHECK(extract_candidates(doc).empty());
}

TEST_CASE("surfaces slice multibyte text by code point") {
  Document doc;
  doc.id = "utf8";
  doc.text = "le caf\xc3\xa9 noir";
  doc.tokens = {{"le", "DT", 0, 2},
                {"caf\xc3\xa9", "NN", 3, 7},
                {"noir", "JJ", 8, 12}};
  const auto cands = extract_candidates(doc);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].surface == "caf\xc3\xa9");
  CHECK(cands[0].start == 3);
  CHECK(cands[0].end == 7);
}

TEST_CASE("unique_candidates groups by normalized form") {
  // "Exports", "export" and "exported"(JJ-less verb form is not a
  // candidate) -- the two noun occurrences share a stem.
  const Document doc = make_tagged_doc("d", {{"Exports", "NNS"},
                                             {"fell", "VBD"},
                                             {"while", "IN"},
                                             {"export", "NN"},
                                             {"volume", "NN"},
                                             {"rose", "VBD"},
                                             {"exports", "NNS"}});
  const auto occurrences = extract_candidates(doc);
  REQUIRE(occurrences.size() == 3);

  const auto groups = unique_candidates(occurrences);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].normalized == "export");
  CHECK(groups[0].display == "Exports");
  CHECK(groups[0].first_offset == 0);
  CHECK(groups[0].occurrence_indices == std::vector<std::size_t>{0, 2});
  CHECK(groups[1].normalized == "export volum");
  CHECK(groups[1].occurrence_indices == std::vector<std::size_t>{1});
}

TEST_CASE("group order follows first occurrence, not frequency") {
  const Document doc = make_tagged_doc(
      "d", {{"ban", "NN"}, {"on", "IN"}, {"beef", "NN"}, {"and", "CC"},
            {"beef", "NN"}, {"and", "CC"}, {"beef", "NN"}});
  const auto groups = unique_candidates(extract_candidates(doc));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].normalized == "ban");
  CHECK(groups[1].normalized == "beef");
  CHECK(groups[1].occurrence_indices.size() == 3);
}

TEST_CASE("scanner agrees with the exhaustive oracle on short sequences") {
  // Every tag sequence up to length 6 over a mixed alphabet. The larger
  // alphabet sweep lives in the acceptance suite.
  const std::vector<std::string> alphabet = {"JJ", "NN", "NNPS", "JJR",
                                             "IN"};
  std::vector<std::string> tags;
  std::size_t checked = 0;

  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      tags.clear();
      for (std::size_t d : digits) tags.push_back(alphabet[d]);

      std::vector<std::pair<std::string, std::string>> tagged;
      for (std::size_t i = 0; i < len; ++i) {
        tagged.emplace_back("w" + std::to_string(i), tags[i]);
      }
      const Document doc = make_tagged_doc("seq", tagged);
      const auto got = spans(extract_candidates(doc));
      const auto want = testutil::oracle_spans(tags);
      if (got != want) {
        std::string joined;
        for (const auto& t : tags) joined += t + " ";
        FAIL("scanner disagrees with oracle on: " << joined);
      }
      ++checked;

      std::size_t i = 0;
      while (i < len && ++digits[i] == alphabet.size()) {
        digits[i] = 0;
        ++i;
      }
      if (i == len) break;
    }
  }
  CHECK(checked == 5 + 25 + 125 + 625 + 3125 + 15625);
}
