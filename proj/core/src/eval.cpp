#include "wikirank/eval.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "wikirank/errors.hpp"
#include "wikirank/io.hpp"
#include "wikirank/text.hpp"

namespace wikirank {
namespace {

using ordered_json = nlohmann::ordered_json;

double f_measure(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

}  // namespace

PredictionRecord parse_prediction_record(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << "malformed JSON at byte " << e.byte << ": " << e.what();
    throw ParseError(msg.str());
  }
  PredictionRecord rec;
  try {
    rec.id = j.at("id").get<std::string>();
    rec.keyphrases = j.at("keyphrases").get<std::vector<std::string>>();
    if (j.contains("objective")) {
      rec.objective = j.at("objective").get<double>();
    }
    if (j.contains("pruned_phrase_count")) {
      rec.pruned_phrase_count =
          j.at("pruned_phrase_count").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad prediction record: ") + e.what());
  }
  return rec;
}

std::string serialize_prediction(const PredictionRecord& rec) {
  ordered_json j;
  j["id"] = rec.id;
  j["keyphrases"] = rec.keyphrases;
  j["objective"] = rec.objective;
  j["pruned_phrase_count"] = rec.pruned_phrase_count;
  return j.dump();
}

std::vector<PredictionRecord> load_predictions(
    const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<PredictionRecord> out;

  std::size_t line_no = 0;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    bool blank = true;
    for (char c : line) {
      if (!is_ascii_space(c)) {
        blank = false;
        break;
      }
    }
    if (blank) continue;
    try {
      out.push_back(parse_prediction_record(line));
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": " << e.what();
      throw ParseError(msg.str());
    }
  }
  return out;
}

bool match_phrase(const std::string& predicted, const std::string& gold,
                  MatchMode mode) {
  if (mode == MatchMode::kExact) {
    return collapse_whitespace(ascii_lower(predicted)) ==
           collapse_whitespace(ascii_lower(gold));
  }
  return normalize_phrase(predicted) == normalize_phrase(gold);
}

EvalReport evaluate(const std::vector<PredictionRecord>& predictions,
                    const std::vector<Document>& corpus, MatchMode mode) {
  std::unordered_map<std::string, const PredictionRecord*> by_id;
  for (const PredictionRecord& rec : predictions) {
    if (!by_id.emplace(rec.id, &rec).second) {
      throw ValidationError("duplicate prediction id '" + rec.id + "'");
    }
  }

  std::unordered_map<std::string, bool> corpus_ids;
  for (const Document& doc : corpus) corpus_ids.emplace(doc.id, true);
  std::string missing;
  for (const PredictionRecord& rec : predictions) {
    if (corpus_ids.find(rec.id) == corpus_ids.end()) {
      if (!missing.empty()) missing += ", ";
      missing += "'" + rec.id + "'";
    }
  }
  if (!missing.empty()) {
    throw ValidationError("prediction ids absent from the corpus: " +
                          missing);
  }

  EvalReport report;
  std::size_t total_pred = 0;
  std::size_t total_gold = 0;
  std::size_t total_matched = 0;

  for (const Document& doc : corpus) {
    if (doc.gold.empty()) {
      ++report.num_skipped;
      continue;
    }
    static const std::vector<std::string> kNoPhrases;
    const auto it = by_id.find(doc.id);
    const std::vector<std::string>& preds =
        it == by_id.end() ? kNoPhrases : it->second->keyphrases;

    DocumentEval de;
    de.id = doc.id;
    de.num_predicted = preds.size();
    de.num_gold = doc.gold.size();

    // Greedy one-to-one matching in prediction order: each prediction
    // claims the first still-unclaimed gold phrase it matches.
    std::vector<bool> claimed(doc.gold.size(), false);
    for (const std::string& pred : preds) {
      for (std::size_t gi = 0; gi < doc.gold.size(); ++gi) {
        if (claimed[gi]) continue;
        if (match_phrase(pred, doc.gold[gi], mode)) {
          claimed[gi] = true;
          de.matched.push_back(doc.gold[gi]);
          ++de.num_matched;
          break;
        }
      }
    }

    de.precision = de.num_predicted == 0
                       ? 0.0
                       : static_cast<double>(de.num_matched) /
                             static_cast<double>(de.num_predicted);
    de.recall = static_cast<double>(de.num_matched) /
                static_cast<double>(de.num_gold);
    de.f1 = f_measure(de.precision, de.recall);

    total_pred += de.num_predicted;
    total_gold += de.num_gold;
    total_matched += de.num_matched;
    report.per_document.push_back(std::move(de));
  }

  report.num_documents = report.per_document.size();
  if (report.num_documents > 0) {
    for (const DocumentEval& de : report.per_document) {
      report.macro_precision += de.precision;
      report.macro_recall += de.recall;
      report.macro_f1 += de.f1;
    }
    const auto n = static_cast<double>(report.num_documents);
    report.macro_precision /= n;
    report.macro_recall /= n;
    report.macro_f1 /= n;
  }
  report.micro_precision =
      total_pred == 0 ? 0.0
                      : static_cast<double>(total_matched) /
                            static_cast<double>(total_pred);
  report.micro_recall = total_gold == 0
                            ? 0.0
                            : static_cast<double>(total_matched) /
                                  static_cast<double>(total_gold);
  report.micro_f1 = f_measure(report.micro_precision, report.micro_recall);
  return report;
}

std::string report_to_json(const EvalReport& report) {
  ordered_json j;
  j["num_documents"] = report.num_documents;
  j["num_skipped"] = report.num_skipped;
  j["macro_precision"] = report.macro_precision;
  j["macro_recall"] = report.macro_recall;
  j["macro_f1"] = report.macro_f1;
  j["micro_precision"] = report.micro_precision;
  j["micro_recall"] = report.micro_recall;
  j["micro_f1"] = report.micro_f1;
  j["per_document"] = ordered_json::array();
  for (const DocumentEval& de : report.per_document) {
    ordered_json dj;
    dj["id"] = de.id;
    dj["num_predicted"] = de.num_predicted;
    dj["num_gold"] = de.num_gold;
    dj["num_matched"] = de.num_matched;
    dj["matched"] = de.matched;
    dj["precision"] = de.precision;
    dj["recall"] = de.recall;
    dj["f1"] = de.f1;
    j["per_document"].push_back(std::move(dj));
  }
  return j.dump(2);
}

}  // namespace wikirank
