// Copyright 2026 The shmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// shmc: unsupervised hierarchical multi-label text classification.
//
// Pipeline: `index` builds an inverted index from a JSONL corpus, `learn`
// induces the concept taxonomy and classification rules from the index, and
// `classify` labels new items with a frozen model. `export` emits the
// taxonomy, `eval` scores predictions, `vectors` dumps debug weights.
//
// Exit codes: 0 success, 1 user/data error, 2 I/O or system error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "shmc/artifacts.hpp"
#include "shmc/classify.hpp"
#include "shmc/config.hpp"
#include "shmc/corpus.hpp"
#include "shmc/errors.hpp"
#include "shmc/evaluate.hpp"
#include "shmc/export.hpp"
#include "shmc/index.hpp"
#include "shmc/model.hpp"
#include "shmc/vectorize.hpp"

namespace {

struct ConfigCli {
  std::optional<std::string> config_path;
  std::optional<int> min_token_len;
  std::optional<std::string> stopwords_path;
  std::optional<std::size_t> min_df;
  std::optional<double> max_df_frac;
  std::optional<double> subsumption_threshold;
  std::optional<double> rule_alpha;
};

// config file first, then per-key command-line overrides.
shmc::PipelineConfig effective_config(const ConfigCli& cli) {
  shmc::PipelineConfig config;
  if (cli.config_path) {
    config = shmc::load_config_file(*cli.config_path);
  }
  if (cli.min_token_len) config.min_token_len = *cli.min_token_len;
  if (cli.stopwords_path) config.stopwords = shmc::load_stopwords(*cli.stopwords_path);
  if (cli.min_df) config.min_df = *cli.min_df;
  if (cli.max_df_frac) config.max_df_frac = *cli.max_df_frac;
  if (cli.subsumption_threshold) {
    config.subsumption_threshold = *cli.subsumption_threshold;
  }
  if (cli.rule_alpha) config.rule_alpha = *cli.rule_alpha;
  shmc::validate_config(config);
  return config;
}

void add_config_options(CLI::App& cmd, ConfigCli& cli, bool tokenizer_keys,
                        bool learn_keys) {
  cmd.add_option("--config", cli.config_path, "JSON config file");
  if (tokenizer_keys) {
    cmd.add_option("--min-token-len", cli.min_token_len,
                   "Minimum token length in code points");
    cmd.add_option("--stopwords", cli.stopwords_path,
                   "Stopword file, one term per line");
  }
  if (learn_keys) {
    cmd.add_option("--min-df", cli.min_df,
                   "Minimum document frequency for concepts");
    cmd.add_option("--max-df-frac", cli.max_df_frac,
                   "Maximum df/N fraction for concepts");
    cmd.add_option("--subsumption-threshold", cli.subsumption_threshold,
                   "Co-occurrence conditional threshold, in (0.5, 1]");
    cmd.add_option("--rule-alpha", cli.rule_alpha,
                   "Scale factor for rule thresholds");
  }
}

int run_index(const std::string& corpus_path, const std::string& out_path,
              const ConfigCli& cli, unsigned workers) {
  shmc::PipelineConfig config = effective_config(cli);
  shmc::TokenizerConfig tokenizer = config.tokenizer();
  shmc::Corpus corpus = shmc::parse_corpus_file(corpus_path, tokenizer, workers);
  shmc::InvertedIndex index = shmc::build_index(corpus, workers);
  shmc::save_index_file(out_path, index, tokenizer);
  return 0;
}

int run_learn(const std::string& index_path, const std::string& out_path,
              const ConfigCli& cli, unsigned workers) {
  shmc::PipelineConfig config = effective_config(cli);
  shmc::IndexFile loaded = shmc::load_index_file(index_path);
  // Tokenizer settings travel inside the index; they describe what was
  // actually indexed and override anything in the learn-time config.
  config.min_token_len = loaded.tokenizer.min_token_len;
  config.stopwords = loaded.tokenizer.stopwords;
  shmc::Model model = shmc::learn_model(loaded.index, config, workers);
  if (model.taxonomy.empty()) {
    std::cerr << "warning: no concepts selected; model has an empty taxonomy "
                 "and zero rules\n";
  }
  shmc::save_model_file(out_path, model);
  return 0;
}

int run_classify(const std::string& model_path, const std::string& items_path,
                 const std::string& out_path, unsigned workers) {
  shmc::Model model = shmc::load_model_file(model_path);
  shmc::Corpus items =
      shmc::read_items_file(items_path, model.config.tokenizer(), workers);
  auto results = shmc::classify_batch(items, model, workers);
  shmc::write_text_file(out_path, shmc::serialize_results(results));
  return 0;
}

int run_export(const std::string& model_path, const std::string& format,
               const std::optional<std::string>& out_path) {
  shmc::Model model = shmc::load_model_file(model_path);
  std::string payload;
  if (format == "triples") {
    payload = shmc::export_triples(model.taxonomy);
  } else if (format == "taxonomy-json") {
    payload = shmc::export_taxonomy_json(model.taxonomy);
  } else {
    throw shmc::DataError("unknown export format '" + format + "'");
  }
  if (out_path) {
    shmc::write_text_file(*out_path, payload);
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_eval(const std::string& gold_path, const std::string& pred_path,
             const std::string& model_path,
             const std::optional<std::string>& taxonomy_path) {
  shmc::Model model = shmc::load_model_file(model_path);
  shmc::GoldLabeling gold = shmc::load_gold_file(gold_path);
  auto predictions = shmc::load_results_file(pred_path);
  shmc::SimilarityReport report =
      shmc::hierarchical_prf(gold, predictions, model.taxonomy);
  std::printf("hP=%.4f hR=%.4f hF=%.4f\n", report.precision, report.recall,
              report.f1);
  if (taxonomy_path) {
    shmc::Taxonomy reference = shmc::load_taxonomy_file(*taxonomy_path);
    shmc::SimilarityReport tax =
        shmc::taxonomy_similarity(model.taxonomy, reference);
    std::printf("tP=%.4f tR=%.4f tF=%.4f\n", tax.precision, tax.recall,
                tax.f1);
  }
  return 0;
}

int run_vectors(const std::string& index_path,
                const std::optional<std::string>& doc_id,
                bool corpus_frequencies) {
  shmc::IndexFile loaded = shmc::load_index_file(index_path);
  if (corpus_frequencies) {
    for (const auto& [term, count] : shmc::corpus_frequency(loaded.index).entries) {
      std::printf("%s %llu\n", term.c_str(),
                  static_cast<unsigned long long>(count));
    }
    return 0;
  }
  if (!doc_id) {
    throw shmc::DataError("vectors: pass --doc ID or --corpus-frequency");
  }
  for (const auto& [term, weight] :
       shmc::tfidf_vector(loaded.index, *doc_id).entries) {
    std::printf("%s %.6f\n", term.c_str(), weight);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unsupervised hierarchical multi-label text classification"};
  app.require_subcommand(1);

  unsigned workers = shmc::default_workers();
  app.add_option("--workers", workers, "Worker thread count")
      ->check(CLI::PositiveNumber);

  std::string corpus_path, index_path, model_path, items_path, out_path;
  std::string gold_path, pred_path, format = "triples";
  std::optional<std::string> optional_out, taxonomy_path, doc_id;
  bool corpus_frequencies = false;
  ConfigCli index_cli, learn_cli;

  CLI::App* cmd_index = app.add_subcommand("index", "Index a JSONL corpus");
  cmd_index->add_option("corpus", corpus_path, "Corpus file (JSONL)")->required();
  cmd_index->add_option("-o,--out", out_path, "Output index file")->required();
  add_config_options(*cmd_index, index_cli, true, false);

  CLI::App* cmd_learn =
      app.add_subcommand("learn", "Learn taxonomy and rules from an index");
  cmd_learn->add_option("index", index_path, "Index file")->required();
  cmd_learn->add_option("-o,--out", out_path, "Output model file")->required();
  add_config_options(*cmd_learn, learn_cli, false, true);

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Classify items with a model");
  cmd_classify->add_option("model", model_path, "Model file")->required();
  cmd_classify->add_option("items", items_path, "Items file (JSONL)")->required();
  cmd_classify->add_option("-o,--out", out_path, "Output results file")->required();

  CLI::App* cmd_export = app.add_subcommand("export", "Export the taxonomy");
  cmd_export->add_option("model", model_path, "Model file")->required();
  cmd_export->add_option("--format", format, "triples or taxonomy-json");
  cmd_export->add_option("-o,--out", optional_out, "Output file (default stdout)");

  CLI::App* cmd_eval = app.add_subcommand("eval", "Score predictions");
  cmd_eval->add_option("--gold", gold_path, "Gold labels (JSONL)")->required();
  cmd_eval->add_option("--pred", pred_path, "Predictions (JSONL)")->required();
  cmd_eval->add_option("--model", model_path, "Model file")->required();
  cmd_eval->add_option("--taxonomy", taxonomy_path,
                       "Reference taxonomy for similarity scoring");

  CLI::App* cmd_vectors = app.add_subcommand("vectors", "Dump debug vectors");
  cmd_vectors->add_option("index", index_path, "Index file")->required();
  cmd_vectors->add_option("--doc", doc_id, "Document id to dump");
  cmd_vectors->add_flag("--corpus-frequency", corpus_frequencies,
                        "Dump corpus-wide term frequencies");

  // lets global options like --workers appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_index)) {
      return run_index(corpus_path, out_path, index_cli, workers);
    }
    if (app.got_subcommand(cmd_learn)) {
      return run_learn(index_path, out_path, learn_cli, workers);
    }
    if (app.got_subcommand(cmd_classify)) {
      return run_classify(model_path, items_path, out_path, workers);
    }
    if (app.got_subcommand(cmd_export)) {
      return run_export(model_path, format, optional_out);
    }
    if (app.got_subcommand(cmd_eval)) {
      return run_eval(gold_path, pred_path, model_path, taxonomy_path);
    }
    if (app.got_subcommand(cmd_vectors)) {
      return run_vectors(index_path, doc_id, corpus_frequencies);
    }
  } catch (const shmc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const shmc::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
