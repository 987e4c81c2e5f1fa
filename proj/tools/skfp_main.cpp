#include <atomic>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "io_util.hpp"
#include "skfp/detect.hpp"
#include "skfp/eval.hpp"
#include "skfp/grams.hpp"
#include "skfp/index.hpp"
#include "skfp/synth.hpp"
#include "skfp/text_prep.hpp"

namespace {

using namespace skfp;

// Exit contract: 0 clean/success, 1 usage or IO error, 2 leak detected.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLeak = 2;

struct ConfigFlags {
  std::uint32_t n = 3;
  std::uint32_t k = 1;
  bool sorted = true;
  bool stemming = true;
  bool stopwords = true;
  std::uint32_t m = 1;  // 0 disables the filter
  std::string stopword_file;

  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* sorted_opt = nullptr;
  CLI::Option* stemming_opt = nullptr;
  CLI::Option* stopwords_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* stopword_file_opt = nullptr;

  void attach(CLI::App& app) {
    n_opt = app.add_option("--n", n, "Gram size in tokens (default 3)")
                ->check(CLI::Range(1u, 65535u));
    k_opt = app.add_option("--k", k, "Maximum total skips per gram (default 1)")
                ->check(CLI::Range(0u, 65535u));
    sorted_opt = app.add_flag("--sorted,!--unsorted", sorted,
                              "Sort gram words alphabetically before hashing (default on)");
    stemming_opt = app.add_flag("--stemming,!--no-stemming", stemming,
                                "Apply Porter stemming (default on)");
    stopwords_opt = app.add_flag("--stopwords,!--no-stopwords", stopwords,
                                 "Remove stopwords before gram extraction (default on)");
    m_opt = app.add_option(
        "--m", m,
        "Drop hashes seen in >= m distinct non-confidential documents; 0 disables "
        "the filter (default 1)");
    stopword_file_opt = app.add_option("--stopword-file", stopword_file,
                                       "Custom stopword list, one word per line");
  }

  EngineConfig build() const {
    EngineConfig config;
    config.gram.n = n;
    config.gram.k = k;
    config.gram.sorted = sorted;
    config.prep.stemming = stemming;
    config.prep.stopword_removal = stopwords;
    if (stopwords) {
      config.prep.stopword_list =
          stopword_file.empty() ? default_stopwords() : load_stopword_file(stopword_file);
    } else {
      config.prep.stopword_list.clear();
    }
    if (m == 0) {
      config.m.reset();
    } else {
      config.m = m;
    }
    return config;
  }

  // Names of explicitly passed flags that disagree with a frozen config.
  void require_compatible(const EngineConfig& frozen) const {
    std::vector<std::string> bad;
    if (n_opt->count() > 0 && n != frozen.gram.n) bad.push_back("--n");
    if (k_opt->count() > 0 && k != frozen.gram.k) bad.push_back("--k");
    if (sorted_opt->count() > 0 && sorted != frozen.gram.sorted) {
      bad.push_back(sorted ? "--sorted" : "--unsorted");
    }
    if (stemming_opt->count() > 0 && stemming != frozen.prep.stemming) {
      bad.push_back(stemming ? "--stemming" : "--no-stemming");
    }
    if (stopwords_opt->count() > 0 && stopwords != frozen.prep.stopword_removal) {
      bad.push_back(stopwords ? "--stopwords" : "--no-stopwords");
    }
    if (m_opt->count() > 0) {
      const std::optional<std::uint32_t> wanted =
          (m == 0) ? std::nullopt : std::optional<std::uint32_t>(m);
      if (wanted != frozen.m) bad.push_back("--m");
    }
    if (stopword_file_opt->count() > 0 && frozen.prep.stopword_removal) {
      PrepConfig candidate = frozen.prep;
      candidate.stopword_list = load_stopword_file(stopword_file);
      if (stopword_digest(candidate) != stopword_digest(frozen.prep)) {
        bad.push_back("--stopword-file");
      }
    }
    if (!bad.empty()) {
      std::string joined;
      for (const auto& flag : bad) {
        if (!joined.empty()) joined += ", ";
        joined += flag;
      }
      throw std::runtime_error(
          "flags conflict with the database's frozen configuration: " + joined);
    }
  }
};

FingerprintIndex load_any_db(const std::filesystem::path& path,
                             const std::string& stopword_file) {
  if (sniff_db(path) == DbKind::workspace) {
    return FingerprintIndex::load_workspace(path);
  }
  std::optional<std::unordered_set<std::string>> words;
  if (!stopword_file.empty()) words = load_stopword_file(stopword_file);
  return FingerprintIndex::import_confidential(path, words);
}

std::string describe_config(const EngineConfig& config) {
  std::string out = "n=" + std::to_string(config.gram.n) +
                    " k=" + std::to_string(config.gram.k) +
                    " sorted=" + (config.gram.sorted ? "yes" : "no") +
                    " stemming=" + (config.prep.stemming ? "yes" : "no") +
                    " stopwords=" + (config.prep.stopword_removal ? "yes" : "no") +
                    " m=";
  out += config.m ? std::to_string(*config.m) : "off";
  return out;
}

void print_index_summary(const char* verb, std::size_t docs, const FingerprintIndex& index) {
  const IndexStats stats = index.stats();
  std::cout << verb << ' ' << docs << " document(s); " << stats.record_count
            << " records stored; space efficiency ";
  if (stats.space_efficiency) {
    std::cout << *stats.space_efficiency << " chars/record";
  } else {
    std::cout << "n/a";
  }
  std::cout << '\n';
}

// ---- index ----------------------------------------------------------------

struct IndexAddOpts {
  std::string db;
  std::string label;
  std::vector<std::string> files;
  ConfigFlags config;
};

int run_index_add(const IndexAddOpts& opts) {
  const bool fresh = !std::filesystem::exists(opts.db);
  FingerprintIndex index =
      fresh ? FingerprintIndex(opts.config.build()) : load_any_db(opts.db, {});
  if (!fresh) opts.config.require_compatible(index.config());
  const Label label = label_from_string(opts.label);
  for (const auto& file : opts.files) {
    index.add_document(make_document(file, detail::read_text_file(file), label), label);
  }
  index.save_workspace(opts.db);
  print_index_summary("indexed", opts.files.size(), index);
  return kExitOk;
}

struct IndexMutateOpts {
  std::string db;
  std::string id;
  std::string label;  // reclassify only
};

int run_index_remove(const IndexMutateOpts& opts) {
  FingerprintIndex index = load_any_db(opts.db, {});
  index.remove_document(opts.id);
  index.save_workspace(opts.db);
  print_index_summary("removed", 1, index);
  return kExitOk;
}

int run_index_reclassify(const IndexMutateOpts& opts) {
  FingerprintIndex index = load_any_db(opts.db, {});
  index.reclassify(opts.id, label_from_string(opts.label));
  index.save_workspace(opts.db);
  print_index_summary("reclassified", 1, index);
  return kExitOk;
}

// ---- detect ---------------------------------------------------------------

struct DetectOpts {
  std::string db;
  std::vector<std::string> files;
  double threshold = 0.0;
  bool normalized = false;
  std::string format = "csv";
  unsigned jobs = 1;
  ConfigFlags config;
};

int run_detect(const DetectOpts& opts) {
  const FingerprintIndex index = load_any_db(opts.db, opts.config.stopword_file);
  opts.config.require_compatible(index.config());

  struct Item {
    std::string path;
    std::optional<Document> doc;
    std::string error;
    DetectionReport report;
  };
  std::vector<Item> items;
  items.reserve(opts.files.size());
  bool any_error = false;
  for (const auto& file : opts.files) {
    Item item;
    item.path = file;
    try {
      item.doc = make_document(file, detail::read_text_file(file), Label::unknown);
    } catch (const std::exception& e) {
      item.error = e.what();
      any_error = true;
    }
    items.push_back(std::move(item));
  }

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    for (auto& item : items) {
      if (item.doc) item.report = score(index, *item.doc);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        if (items[i].doc) items[i].report = score(index, *items[i].doc);
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }

  bool any_leak = false;
  const bool verbose = opts.format == "verbose";
  if (!verbose) std::cout << "doc,score,normalized_score,best_match,verdict\n";
  for (const auto& item : items) {
    if (!item.doc) {
      std::cerr << "error: " << item.error << '\n';
      continue;
    }
    const bool leak =
        classify(item.report, opts.threshold, opts.normalized) == Verdict::leak;
    any_leak = any_leak || leak;
    const std::string best = item.report.best_match.value_or("");
    if (verbose) {
      std::cout << "doc: " << item.path << '\n'
                << "  score: " << item.report.score << '\n'
                << "  normalized score: " << item.report.normalized_score << '\n'
                << "  probe hashes: " << item.report.probe_hash_count << '\n'
                << "  best match: " << (best.empty() ? "-" : best) << '\n'
                << "  matched hashes: " << item.report.matched_hashes.size() << '\n'
                << "  verdict: " << (leak ? "leak" : "clean") << '\n';
    } else {
      std::cout << item.path << ',' << item.report.score << ','
                << item.report.normalized_score << ',' << best << ','
                << (leak ? "leak" : "clean") << '\n';
    }
  }
  if (any_error) return kExitError;
  return any_leak ? kExitLeak : kExitOk;
}

// ---- eval -----------------------------------------------------------------

struct EvalOpts {
  int scenario = 0;  // 0 = not set
  std::string duplicates;
  std::string corpus;
  std::string thesaurus_file;
  std::string clustered;
  std::string cluster;
  std::string dump_dataset;
  std::uint64_t seed = 1;
  double threshold = 0.0;
  bool normalized = false;
  unsigned jobs = 1;
  bool compare_baseline = false;
  ConfigFlags config;
};

void print_eval_result(const std::string& scenario_name, std::uint64_t seed,
                       const EvalResult& result) {
  const EngineConfig& config = result.config;
  std::cout << "scenario,n,k,sorted,stemming,stopwords,m,seed,threshold,normalized,"
               "probes,leaks,auc,tp,fp,fn,tn,records,space_efficiency,probe_chars,"
               "detect_seconds,throughput_cps\n";
  std::uint64_t leaks = 0;
  for (const auto& [report, is_leak] : result.reports) {
    if (is_leak) ++leaks;
  }
  std::cout << scenario_name << ',' << config.gram.n << ',' << config.gram.k << ','
            << (config.gram.sorted ? 1 : 0) << ',' << (config.prep.stemming ? 1 : 0)
            << ',' << (config.prep.stopword_removal ? 1 : 0) << ','
            << (config.m ? *config.m : 0) << ',' << seed << ','
            << result.options.threshold << ',' << (result.options.normalized ? 1 : 0)
            << ',' << result.reports.size() << ',' << leaks << ',' << result.roc.auc
            << ',' << result.confusion.tp << ',' << result.confusion.fp << ','
            << result.confusion.fn << ',' << result.confusion.tn << ','
            << result.record_count << ',';
  if (result.space_efficiency) std::cout << *result.space_efficiency;
  std::cout << ',' << result.probe_char_total << ',' << result.detect_seconds << ','
            << result.throughput_cps << '\n';
  std::cout << "threshold,fpr,tpr\n";
  for (const auto& point : result.roc.points) {
    std::cout << point.threshold << ',' << point.fpr << ',' << point.tpr << '\n';
  }
}

int run_eval_cmd(const EvalOpts& opts) {
  if ((opts.scenario == 0) == opts.duplicates.empty()) {
    throw std::runtime_error("pass exactly one of --scenario or --duplicates");
  }

  EvalDataset dataset;
  std::string name;
  if (!opts.duplicates.empty()) {
    if (opts.corpus.empty()) throw std::runtime_error("--duplicates requires --corpus");
    const Corpus corpus = load_corpus(opts.corpus);
    DuplicateKind kind;
    if (opts.duplicates == "full") {
      kind = DuplicateKind::full;
    } else if (opts.duplicates == "near") {
      kind = DuplicateKind::near;
    } else if (opts.duplicates == "partial") {
      kind = DuplicateKind::partial;
    } else {
      throw std::runtime_error("unknown duplicate kind: " + opts.duplicates);
    }
    dataset = build_duplicate_dataset(corpus, kind, opts.seed);
    name = "dup-" + opts.duplicates;
  } else if (opts.scenario == 1) {
    if (opts.corpus.empty()) throw std::runtime_error("--scenario 1 requires --corpus");
    if (opts.thesaurus_file.empty()) {
      throw std::runtime_error("--scenario 1 requires --thesaurus-file");
    }
    dataset = build_scenario1(load_corpus(opts.corpus),
                              load_thesaurus(opts.thesaurus_file), opts.seed);
    name = "1";
  } else if (opts.scenario == 2) {
    if (opts.corpus.empty()) throw std::runtime_error("--scenario 2 requires --corpus");
    dataset = build_scenario2(load_corpus(opts.corpus), opts.seed);
    name = "2";
  } else if (opts.scenario == 3) {
    if (opts.clustered.empty()) {
      throw std::runtime_error("--scenario 3 requires --clustered");
    }
    const ClusteredCorpus clustered = load_clustered_corpus(opts.clustered);
    const std::string cluster =
        opts.cluster.empty() ? clustered.clusters.begin()->first : opts.cluster;
    dataset = build_scenario3(clustered, cluster);
    name = "3";
  } else {
    throw std::runtime_error("unknown scenario number: " + std::to_string(opts.scenario));
  }

  if (!opts.dump_dataset.empty()) write_dataset(dataset, opts.dump_dataset);

  EvalOptions eval_options;
  eval_options.threshold = opts.threshold;
  eval_options.normalized = opts.normalized;
  eval_options.jobs = opts.jobs;

  std::vector<EngineConfig> configs{opts.config.build()};
  if (opts.compare_baseline) {
    EngineConfig baseline = EngineConfig::full_fingerprinting(opts.config.n);
    baseline.prep = configs.front().prep;  // comparable text preparation
    configs.push_back(std::move(baseline));
  }
  for (const auto& config : configs) {
    print_eval_result(name, opts.seed, run_eval(dataset, config, eval_options));
  }
  return kExitOk;
}

// ---- grams ----------------------------------------------------------------

struct GramsOpts {
  std::string file;
  std::string text;
  CLI::Option* text_opt = nullptr;
  ConfigFlags config;
};

int run_grams(const GramsOpts& opts) {
  std::string input;
  if (opts.text_opt->count() > 0) {
    if (!opts.file.empty()) {
      throw std::runtime_error("pass either --text or a file, not both");
    }
    input = opts.text;
  } else if (!opts.file.empty()) {
    input = detail::read_text_file(opts.file);
  } else {
    input.assign(std::istreambuf_iterator<char>(std::cin),
                 std::istreambuf_iterator<char>());
  }
  const EngineConfig config = opts.config.build();
  const TokenSequence prepared = prepare(input, config.prep);
  for (const Gram& gram : extract(prepared, config.gram)) {
    std::cout << gram.canonical_form << '\n';
  }
  return kExitOk;
}

// ---- export / stats -------------------------------------------------------

struct ExportOpts {
  std::string db;
  std::string out;
};

int run_export(const ExportOpts& opts) {
  const FingerprintIndex index = load_any_db(opts.db, {});
  index.export_confidential(opts.out);
  std::cout << "exported " << index.confidential_count()
            << " confidential fingerprint(s) to " << opts.out << '\n';
  return kExitOk;
}

struct StatsOpts {
  std::string db;
};

int run_stats(const StatsOpts& opts) {
  const FingerprintIndex index = load_any_db(opts.db, {});
  const IndexStats stats = index.stats();
  std::cout << "documents: " << index.confidential_count() << " confidential, "
            << index.non_confidential_count() << " non-confidential\n"
            << "records: " << stats.record_count << '\n'
            << "corpus chars: " << stats.corpus_char_total << '\n'
            << "space efficiency: ";
  if (stats.space_efficiency) {
    std::cout << *stats.space_efficiency << " chars/record\n";
  } else {
    std::cout << "n/a\n";
  }
  std::cout << "config: " << describe_config(index.config()) << '\n'
            << "read-only: " << (index.read_only() ? "yes" : "no") << '\n';
  return kExitOk;
}

// ---- synth ----------------------------------------------------------------

struct SynthOpts {
  std::string out;
  std::uint64_t seed = 42;
  SynthParams params;
};

int run_synth(const SynthOpts& opts) {
  const SyntheticData data = generate_synthetic(opts.params, opts.seed);
  write_synthetic(data, opts.out);
  std::cout << "wrote synthetic corpus (" << opts.params.confidential_docs
            << " confidential, " << opts.params.non_confidential_docs
            << " non-confidential, " << opts.params.clusters << "x"
            << opts.params.passages_per_cluster << " clustered passages, seed "
            << opts.seed << ") to " << opts.out << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "skfp - sorted skip-gram fingerprinting for content-based leak detection.\n"
      "Exit codes: 0 clean/success, 1 usage or IO error, 2 leak detected."};
  app.require_subcommand(1);
  int rc = kExitOk;

  // index
  auto* index_cmd = app.add_subcommand("index", "Maintain a fingerprint workspace");
  index_cmd->require_subcommand(1);

  IndexAddOpts add_opts;
  auto* add_cmd = index_cmd->add_subcommand(
      "add", "Fingerprint files and add them under a label");
  add_cmd->add_option("--db", add_opts.db, "Workspace path (created on first add)")
      ->required();
  add_cmd->add_option("--label", add_opts.label, "confidential | non_confidential")
      ->required();
  add_cmd->add_option("files", add_opts.files, "Text files; the path becomes the id")
      ->required();
  add_opts.config.attach(*add_cmd);
  add_cmd->callback([&] { rc = run_index_add(add_opts); });

  IndexMutateOpts remove_opts;
  auto* remove_cmd =
      index_cmd->add_subcommand("remove", "Remove an indexed document by id");
  remove_cmd->add_option("--db", remove_opts.db, "Workspace path")->required();
  remove_cmd->add_option("--id", remove_opts.id, "Document id")->required();
  remove_cmd->callback([&] { rc = run_index_remove(remove_opts); });

  IndexMutateOpts reclassify_opts;
  auto* reclassify_cmd = index_cmd->add_subcommand(
      "reclassify", "Move an indexed document to the other label");
  reclassify_cmd->add_option("--db", reclassify_opts.db, "Workspace path")->required();
  reclassify_cmd->add_option("--id", reclassify_opts.id, "Document id")->required();
  reclassify_cmd
      ->add_option("--label", reclassify_opts.label, "confidential | non_confidential")
      ->required();
  reclassify_cmd->callback([&] { rc = run_index_reclassify(reclassify_opts); });

  // detect
  DetectOpts detect_opts;
  auto* detect_cmd = app.add_subcommand(
      "detect",
      "Score files against the confidential index. CSV columns: "
      "doc,score,normalized_score,best_match,verdict");
  detect_cmd->add_option("--db", detect_opts.db, "Workspace or exported database")
      ->required();
  detect_cmd->add_option("files", detect_opts.files, "Probe text files")->required();
  detect_cmd->add_option("--threshold", detect_opts.threshold,
                         "Leak when score > threshold (default 0)");
  detect_cmd->add_flag("--normalized", detect_opts.normalized,
                       "Threshold the normalized score (score / probe hashes)");
  detect_cmd->add_option("--format", detect_opts.format, "csv | verbose (default csv)")
      ->check(CLI::IsMember({"csv", "verbose"}));
  detect_cmd->add_option("--jobs", detect_opts.jobs,
                         "Worker threads across probes (default 1)");
  detect_opts.config.attach(*detect_cmd);
  detect_cmd->callback([&] { rc = run_detect(detect_opts); });

  // eval
  EvalOpts eval_opts;
  auto* eval_cmd = app.add_subcommand(
      "eval",
      "Build a scenario dataset and report ROC/AUC. Emits a summary CSV row "
      "(scenario,n,k,sorted,stemming,stopwords,m,seed,threshold,normalized,probes,"
      "leaks,auc,tp,fp,fn,tn,records,space_efficiency,probe_chars,detect_seconds,"
      "throughput_cps) followed by ROC points (threshold,fpr,tpr)");
  eval_cmd->add_option("--scenario", eval_opts.scenario,
                       "1 = known-document leaks, 2 = unseen-document leaks, "
                       "3 = rephrased clusters")
      ->check(CLI::Range(1, 3));
  eval_cmd->add_option("--duplicates", eval_opts.duplicates,
                       "Duplicate dataset instead of a scenario: full | near | partial")
      ->check(CLI::IsMember({"full", "near", "partial"}));
  eval_cmd->add_option("--corpus", eval_opts.corpus,
                       "Corpus root with confidential/ and non_confidential/");
  eval_cmd->add_option("--thesaurus-file", eval_opts.thesaurus_file,
                       "Synonym file for scenario 1 rephrasing");
  eval_cmd->add_option("--clustered", eval_opts.clustered,
                       "Clustered corpus root for scenario 3");
  eval_cmd->add_option("--cluster", eval_opts.cluster,
                       "Cluster id for scenario 3 (default: first cluster)");
  eval_cmd->add_option("--dump-dataset", eval_opts.dump_dataset,
                       "Write the generated dataset under this directory");
  eval_cmd->add_option("--seed", eval_opts.seed, "Dataset seed (default 1)");
  eval_cmd->add_option("--threshold", eval_opts.threshold,
                       "Confusion-matrix threshold (default 0)");
  eval_cmd->add_flag("--normalized", eval_opts.normalized,
                     "Sweep normalized scores instead of raw scores");
  eval_cmd->add_option("--jobs", eval_opts.jobs,
                       "Worker threads across probes; 1 = single-threaded timing");
  eval_cmd->add_flag("--compare-baseline", eval_opts.compare_baseline,
                     "Also evaluate the classic full-fingerprinting baseline "
                     "(contiguous n-grams, unsorted, no filter)");
  eval_opts.config.attach(*eval_cmd);
  eval_cmd->callback([&] { rc = run_eval_cmd(eval_opts); });

  // grams
  GramsOpts grams_opts;
  auto* grams_cmd = app.add_subcommand(
      "grams", "Print canonical gram forms, one per line, in enumeration order");
  grams_cmd->add_option("file", grams_opts.file, "Input file (default: stdin)");
  grams_opts.text_opt =
      grams_cmd->add_option("--text", grams_opts.text, "Literal input text");
  grams_opts.config.attach(*grams_cmd);
  grams_cmd->callback([&] { rc = run_grams(grams_opts); });

  // export
  ExportOpts export_opts;
  auto* export_cmd = app.add_subcommand(
      "export", "Write the read-only detection database (filtered confidential "
                "fingerprints only)");
  export_cmd->add_option("--db", export_opts.db, "Workspace path")->required();
  export_cmd->add_option("--out", export_opts.out, "Output database path")->required();
  export_cmd->callback([&] { rc = run_export(export_opts); });

  // stats
  StatsOpts stats_opts;
  auto* stats_cmd =
      app.add_subcommand("stats", "Print record count, corpus size and space efficiency");
  stats_cmd->add_option("--db", stats_opts.db, "Workspace or exported database")
      ->required();
  stats_cmd->callback([&] { rc = run_stats(stats_opts); });

  // synth
  SynthOpts synth_opts;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Generate the deterministic synthetic corpus, thesaurus and clusters");
  synth_cmd->add_option("--out", synth_opts.out, "Output directory")->required();
  synth_cmd->add_option("--seed", synth_opts.seed, "Generator seed (default 42)");
  synth_cmd->add_option("--confidential", synth_opts.params.confidential_docs,
                        "Confidential document count (default 70)");
  synth_cmd->add_option("--non-confidential", synth_opts.params.non_confidential_docs,
                        "Non-confidential document count (default 220)");
  synth_cmd->add_option("--clusters", synth_opts.params.clusters,
                        "Cluster count (default 6)");
  synth_cmd->add_option("--passages", synth_opts.params.passages_per_cluster,
                        "Passages per cluster (default 8)");
  synth_cmd->callback([&] { rc = run_synth(synth_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return rc;
}
