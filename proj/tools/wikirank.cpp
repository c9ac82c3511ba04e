// Command-line front end for the wikirank pipeline:
//   annotate -> extract -> eval, plus graph dumps and the brute-force oracle.
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wikirank/annotate.hpp"
#include "wikirank/candidates.hpp"
#include "wikirank/corpus.hpp"
#include "wikirank/errors.hpp"
#include "wikirank/eval.hpp"
#include "wikirank/gazetteer.hpp"
#include "wikirank/graph.hpp"
#include "wikirank/io.hpp"
#include "wikirank/optimize.hpp"
#include "wikirank/pipeline.hpp"
#include "wikirank/tagger.hpp"
#include "wikirank/tagme.hpp"

namespace {

using namespace wikirank;

struct CommonOpts {
  std::size_t jobs = 1;
};

struct AnnotateOpts {
  std::string in;
  std::string out;
  std::string mode = "gazetteer";
  std::string gazetteer_path;
  AnnotatorConfig config;
};

struct ExtractOpts {
  std::string in;
  std::string out;
  std::size_t k = 10;
  std::size_t m = 3;
  bool no_prune = false;
  bool pad_to_k = false;
  std::string tie_break = "first";
  std::string link_rule = "overlap";
};

struct EvalOpts {
  std::string pred;
  std::string corpus;
  std::string mode = "stemmed";
  std::string report_path;
};

struct GraphOpts {
  std::string in;
  std::string id;
  std::string format = "json";
  std::string link_rule = "overlap";
};

struct OracleOpts {
  std::string in;
  std::string id;
  std::size_t k = 10;
  std::size_t m = 3;
  bool no_prune = false;
  std::string link_rule = "overlap";
};

OverlapRule parse_link_rule(const std::string& name) {
  if (name == "overlap") return OverlapRule::kOverlap;
  if (name == "containment") return OverlapRule::kContainment;
  throw ConfigError("unknown link rule '" + name + "'");
}

TieBreak parse_tie_break(const std::string& name) {
  if (name == "first") return TieBreak::kFirstOccurrence;
  if (name == "lex") return TieBreak::kLexicographic;
  throw ConfigError("unknown tie break '" + name + "'");
}

MatchMode parse_match_mode(const std::string& name) {
  if (name == "exact") return MatchMode::kExact;
  if (name == "stemmed") return MatchMode::kStemmed;
  throw ConfigError("unknown match mode '" + name + "'");
}

// Simple stderr progress line, printed every `step` completions.
void report_progress(std::atomic<std::size_t>& done, std::size_t total,
                     std::size_t step) {
  const std::size_t d = done.fetch_add(1) + 1;
  if (d % step == 0 || d == total) {
    std::cerr << "processed " << d << "/" << total << "\n";
  }
}

int cmd_annotate(const AnnotateOpts& opts, const CommonOpts& common) {
  const std::vector<Document> corpus = load_corpus(opts.in);

  std::optional<Gazetteer> gaz;
  std::optional<TagmeClient> client;
  if (opts.mode == "gazetteer") {
    if (opts.gazetteer_path.empty()) {
      throw ConfigError("gazetteer mode needs --gazetteer");
    }
    gaz = Gazetteer::load(opts.gazetteer_path);
  } else if (opts.mode == "tagme") {
    if (opts.config.tagme_token.empty()) {
      throw ConfigError(
          "tagme mode needs an access token (TAGME_TOKEN or --tagme-token)");
    }
    client.emplace(opts.config);
  } else {
    throw ConfigError("unknown annotator mode '" + opts.mode + "'");
  }

  const std::size_t n = corpus.size();
  std::vector<std::string> lines(n);
  std::vector<std::string> failures(n);
  std::atomic<std::size_t> done{0};

  std::size_t jobs = common.jobs;
  if (opts.mode == "tagme") {
    jobs = std::min(jobs, opts.config.max_concurrent_requests);
  }

  parallel_for_each(jobs, n, [&](std::size_t i) {
    try {
      Document doc = corpus[i];
      doc.annotations =
          gaz ? gazetteer_annotate(doc, *gaz, opts.config.confidence_threshold,
                                   opts.config.max_anchor_tokens)
              : client->annotate(doc.text);
      validate_document(doc);
      lines[i] = serialize_document(doc);
    } catch (const Error& e) {
      failures[i] = e.what();
    }
    report_progress(done, n, 100);
  });

  bool any_failed = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!failures[i].empty()) {
      any_failed = true;
      std::cerr << "error: document '" << corpus[i].id
                << "': " << failures[i] << "\n";
    }
  }
  if (any_failed) return 1;

  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out.push_back('\n');
  }
  atomic_write_file(opts.out, out);
  return 0;
}

int cmd_extract(const ExtractOpts& opts, const CommonOpts& common) {
  const std::vector<Document> corpus = load_corpus(opts.in);

  ExtractionConfig extraction;
  extraction.k = opts.k;
  extraction.tie_break = parse_tie_break(opts.tie_break);
  extraction.pad_to_k = opts.pad_to_k;

  PruneConfig prune_config;
  prune_config.m = opts.m;
  if (opts.no_prune) {
    prune_config.step1 = prune_config.step2 = prune_config.step3 = false;
  }

  AnnotatorConfig annotator;
  annotator.link_rule = parse_link_rule(opts.link_rule);

  const FallbackTagger fallback;
  const std::size_t n = corpus.size();
  std::vector<std::string> lines(n);
  std::vector<bool> skipped(n, false);
  std::atomic<std::size_t> done{0};

  parallel_for_each(common.jobs, n, [&](std::size_t i) {
    Document doc = corpus[i];
    if (doc.tokens.empty()) {
      if (doc.text.empty()) {
        skipped[i] = true;
        report_progress(done, n, 100);
        return;
      }
      doc.tokens = fallback.tag(doc.text);
    }
    lines[i] = serialize_prediction(
        extract_document(doc, extraction, prune_config, annotator));
    report_progress(done, n, 100);
  });

  std::string out;
  std::size_t skip_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (skipped[i]) {
      ++skip_count;
      std::cerr << "warning: document '" << corpus[i].id
                << "' has no tokens and no text, skipped\n";
      continue;
    }
    if (corpus[i].tokens.empty()) {
      std::cerr << "warning: document '" << corpus[i].id
                << "' has no tokens, used the fallback tagger\n";
    }
    out += lines[i];
    out.push_back('\n');
  }
  if (n > 0 && skip_count == n) {
    std::cerr << "error: every document was skipped\n";
    return 1;
  }
  atomic_write_file(opts.out, out);
  return 0;
}

int cmd_eval(const EvalOpts& opts) {
  const std::vector<PredictionRecord> preds = load_predictions(opts.pred);
  const std::vector<Document> corpus = load_corpus(opts.corpus);
  if (preds.empty() && !corpus.empty()) {
    throw ValidationError("predictions file '" + opts.pred + "' is empty");
  }

  const EvalReport report =
      evaluate(preds, corpus, parse_match_mode(opts.mode));

  std::cout << std::left << std::setw(24) << "id" << std::right
            << std::setw(10) << "P" << std::setw(10) << "R" << std::setw(10)
            << "F1" << std::setw(9) << "match" << std::setw(8) << "pred"
            << std::setw(8) << "gold" << "\n";
  std::cout << std::fixed << std::setprecision(4);
  for (const DocumentEval& de : report.per_document) {
    std::cout << std::left << std::setw(24) << de.id << std::right
              << std::setw(10) << de.precision << std::setw(10) << de.recall
              << std::setw(10) << de.f1 << std::setw(9) << de.num_matched
              << std::setw(8) << de.num_predicted << std::setw(8)
              << de.num_gold << "\n";
  }
  std::cout << "macro: P=" << report.macro_precision
            << " R=" << report.macro_recall << " F1=" << report.macro_f1
            << "\n";
  std::cout << "micro: P=" << report.micro_precision
            << " R=" << report.micro_recall << " F1=" << report.micro_f1
            << "\n";
  std::cout << "documents scored: " << report.num_documents
            << ", skipped (no gold): " << report.num_skipped << "\n";

  if (!opts.report_path.empty()) {
    atomic_write_file(opts.report_path, report_to_json(report) + "\n");
  }
  return 0;
}

// Shared by graph and oracle: build the document's semantic graph.
SemanticGraph build_for_document(const Document& doc, OverlapRule rule) {
  Document copy = doc;
  if (copy.tokens.empty() && !copy.text.empty()) {
    copy.tokens = FallbackTagger().tag(copy.text);
  }
  const auto occurrences = extract_candidates(copy);
  const auto links = link_candidates(occurrences, copy.annotations, rule);
  return build_graph(copy, occurrences, links);
}

const Document& find_document(const std::vector<Document>& corpus,
                              const std::string& id) {
  for (const Document& doc : corpus) {
    if (doc.id == id) return doc;
  }
  throw ValidationError("no document with id '" + id + "'");
}

int cmd_graph(const GraphOpts& opts) {
  const std::vector<Document> corpus = load_corpus(opts.in);
  const Document& doc = find_document(corpus, opts.id);
  const SemanticGraph g =
      build_for_document(doc, parse_link_rule(opts.link_rule));
  if (opts.format == "json") {
    std::cout << graph_to_json(g) << "\n";
  } else if (opts.format == "dot") {
    std::cout << graph_to_dot(g);
  } else {
    throw ConfigError("unknown format '" + opts.format + "'");
  }
  return 0;
}

int cmd_oracle(const OracleOpts& opts) {
  const std::vector<Document> corpus = load_corpus(opts.in);
  const Document& doc = find_document(corpus, opts.id);
  SemanticGraph g = build_for_document(doc, parse_link_rule(opts.link_rule));

  PruneConfig prune_config;
  prune_config.m = opts.m;
  if (opts.no_prune) {
    prune_config.step1 = prune_config.step2 = prune_config.step3 = false;
  }
  const SemanticGraph pruned = prune(g, prune_config);

  ExtractionConfig extraction;
  extraction.k = opts.k;
  const KeyphraseSet greedy = greedy_extract(pruned, extraction);
  const KeyphraseSet exact = brute_force_extract(pruned, opts.k);

  auto print_set = [](const char* label, const KeyphraseSet& s) {
    std::cout << label << " value=" << s.objective_value << " phrases=[";
    for (std::size_t i = 0; i < s.phrases.size(); ++i) {
      if (i > 0) std::cout << " | ";
      std::cout << s.phrases[i];
    }
    std::cout << "]\n";
  };
  std::cout << "phrases: " << pruned.phrase_count()
            << ", concepts: " << pruned.concept_count() << ", k=" << opts.k
            << "\n";
  print_set("greedy :", greedy);
  print_set("optimum:", exact);
  if (exact.objective_value > 0.0) {
    std::cout << "ratio  : "
              << greedy.objective_value / exact.objective_value << "\n";
  }
  return 0;
}

bool flag_given(int argc, char** argv, std::string_view name) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == name) return true;
    if (arg.size() > name.size() && arg.substr(0, name.size()) == name &&
        arg[name.size()] == '=') {
      return true;
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wikirank: concept-coverage keyphrase extraction"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML file");

  CommonOpts common;
  app.add_option("--jobs", common.jobs, "Worker threads for per-document work")
      ->capture_default_str();

  AnnotateOpts an;
  auto* annotate_cmd =
      app.add_subcommand("annotate", "Attach concept annotations to a corpus");
  annotate_cmd->fallthrough();
  annotate_cmd->add_option("--in", an.in, "Input corpus (JSONL)")->required();
  annotate_cmd->add_option("--out", an.out, "Output corpus (JSONL)")
      ->required();
  annotate_cmd->add_option("--mode", an.mode, "Annotator: gazetteer or tagme")
      ->capture_default_str();
  annotate_cmd->add_option("--gazetteer", an.gazetteer_path,
                           "Anchor table (TSV) for gazetteer mode");
  annotate_cmd
      ->add_option("--threshold", an.config.confidence_threshold,
                   "Minimum annotation confidence")
      ->capture_default_str();
  annotate_cmd
      ->add_option("--max-anchor-tokens", an.config.max_anchor_tokens,
                   "Longest anchor n-gram tried by the gazetteer")
      ->capture_default_str();
  annotate_cmd
      ->add_option("--tagme-endpoint", an.config.tagme_endpoint,
                   "TagMe service endpoint")
      ->capture_default_str();
  annotate_cmd->add_option("--tagme-token", an.config.tagme_token,
                           "TagMe access token (or set TAGME_TOKEN)");
  annotate_cmd->add_option("--cache-dir", an.config.cache_dir,
                           "Directory for cached TagMe responses");
  annotate_cmd
      ->add_option("--max-text-chars", an.config.max_text_chars,
                   "Chunk size limit sent per TagMe request")
      ->capture_default_str();
  annotate_cmd
      ->add_option("--retry-limit", an.config.retry_limit,
                   "Retries after a transient TagMe failure")
      ->capture_default_str();
  annotate_cmd
      ->add_option("--retry-delay-ms", an.config.retry_initial_delay_ms,
                   "Initial backoff delay, doubled per retry")
      ->capture_default_str();
  annotate_cmd
      ->add_option("--max-concurrent", an.config.max_concurrent_requests,
                   "Upper bound on in-flight TagMe requests")
      ->capture_default_str();

  ExtractOpts ex;
  auto* extract_cmd =
      app.add_subcommand("extract", "Select keyphrases per document");
  extract_cmd->fallthrough();
  extract_cmd->add_option("--in", ex.in, "Annotated corpus (JSONL)")
      ->required();
  extract_cmd->add_option("--out", ex.out, "Predictions output (JSONL)")
      ->required();
  extract_cmd->add_option("--k", ex.k, "Keyphrases per document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  extract_cmd->add_option("--m", ex.m, "Fan-out cap for prune step 3")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  extract_cmd->add_flag("--no-prune", ex.no_prune, "Disable graph pruning");
  extract_cmd->add_flag("--pad-to-k", ex.pad_to_k,
                        "Keep selecting zero-gain phrases up to k");
  extract_cmd
      ->add_option("--tie-break", ex.tie_break, "Tie break: first or lex")
      ->capture_default_str();
  extract_cmd
      ->add_option("--link-rule", ex.link_rule,
                   "Span rule: overlap or containment")
      ->capture_default_str();

  EvalOpts ev;
  auto* eval_cmd =
      app.add_subcommand("eval", "Score predictions against gold keyphrases");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--pred", ev.pred, "Predictions (JSONL)")->required();
  eval_cmd->add_option("--corpus", ev.corpus, "Corpus with gold keyphrases")
      ->required();
  eval_cmd->add_option("--mode", ev.mode, "Matching: stemmed or exact")
      ->capture_default_str();
  eval_cmd->add_option("--report", ev.report_path,
                       "Write the full JSON report here");

  GraphOpts gr;
  auto* graph_cmd =
      app.add_subcommand("graph", "Dump one document's semantic graph");
  graph_cmd->fallthrough();
  graph_cmd->add_option("--in", gr.in, "Annotated corpus (JSONL)")
      ->required();
  graph_cmd->add_option("--id", gr.id, "Document id")->required();
  graph_cmd->add_option("--format", gr.format, "Output: json or dot")
      ->capture_default_str();
  graph_cmd
      ->add_option("--link-rule", gr.link_rule,
                   "Span rule: overlap or containment")
      ->capture_default_str();

  OracleOpts orc;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Compare greedy against the exhaustive optimum");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("--in", orc.in, "Annotated corpus (JSONL)")
      ->required();
  oracle_cmd->add_option("--id", orc.id, "Document id")->required();
  oracle_cmd->add_option("--k", orc.k, "Keyphrases to select")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_cmd->add_option("--m", orc.m, "Fan-out cap for prune step 3")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_cmd->add_flag("--no-prune", orc.no_prune, "Disable graph pruning");
  oracle_cmd
      ->add_option("--link-rule", orc.link_rule,
                   "Span rule: overlap or containment")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  // Precedence for the token: --tagme-token beats TAGME_TOKEN beats config
  // file. CLI11 applies config files before the environment, so the
  // environment lookup happens here instead of via ->envname().
  if (!flag_given(argc, argv, "--tagme-token")) {
    if (const char* env = std::getenv("TAGME_TOKEN"); env != nullptr &&
                                                      *env != '\0') {
      an.config.tagme_token = env;
    }
  }
  if (an.mode == "tagme") an.config.mode = AnnotatorMode::kTagme;

  try {
    if (annotate_cmd->parsed()) return cmd_annotate(an, common);
    if (extract_cmd->parsed()) return cmd_extract(ex, common);
    if (eval_cmd->parsed()) return cmd_eval(ev);
    if (graph_cmd->parsed()) return cmd_graph(gr);
    if (oracle_cmd->parsed()) return cmd_oracle(orc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
