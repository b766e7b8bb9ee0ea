#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ieval/baselines.hpp"
#include "ieval/behavior.hpp"
#include "ieval/conll.hpp"
#include "ieval/corpus.hpp"
#include "ieval/error.hpp"
#include "ieval/metrics.hpp"
#include "ieval/normalize.hpp"
#include "ieval/overlap.hpp"
#include "ieval/report.hpp"
#include "ieval/span_json.hpp"
#include "ieval/stats.hpp"
#include "ieval/tags.hpp"

namespace {

using namespace ieval;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitFormat = 2;
constexpr int kExitBadFlags = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OverlappingSpans:
    case ErrorCode::SentenceMismatch:
    case ErrorCode::EmptyEvalCorpus:
    case ErrorCode::IneligibleSentence:
      return kExitValidation;
    case ErrorCode::UnknownCriterion:
    case ErrorCode::UnsupportedFormat:
      return kExitBadFlags;
    default:
      return kExitFormat;
  }
}

struct InputOptions {
  bool conll = false;
  int token_col = 0;
  int tag_col = 1;
  std::string scheme = "iob2";
  bool strict = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--conll", conll,
                  "Corpus inputs are CoNLL files instead of span-JSON");
    cmd->add_option("--token-col", token_col, "CoNLL token column (default 0)");
    cmd->add_option("--tag-col", tag_col,
                    "CoNLL tag column; -1 selects the last column (default 1)");
    cmd->add_option("--scheme", scheme, "CoNLL tagging scheme")
        ->check(CLI::IsMember({"iob1", "iob2", "iobes"}));
    cmd->add_flag("--strict", strict,
                  "Reject ill-formed tag sequences instead of repairing them");
  }

  AnnotatedCorpus load(const std::string& path, Role role) const {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    AnnotatedCorpus corpus;
    if (conll) {
      ConllOptions options;
      options.token_column = token_col;
      options.tag_column = tag_col;
      options.scheme = scheme_from_string(scheme);
      options.strictness =
          strict ? Strictness::Strict : Strictness::Lenient;
      corpus = parse_conll(in, options);
    } else {
      corpus = parse_span_json(in);
    }
    corpus.role = role;
    return corpus;
  }
};

struct PolicyOptions {
  bool case_insensitive = false;
  bool type_insensitive = false;
  bool strip_article = false;
  bool strip_possessive = false;
  std::string stopword_file;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--case-insensitive", case_insensitive,
                  "Fold case when comparing surfaces");
    cmd->add_flag("--type-insensitive", type_insensitive,
                  "Ignore entity types in overlap classification");
    cmd->add_flag("--strip-article", strip_article,
                  "Drop a leading 'the' from mention surfaces");
    cmd->add_flag("--strip-possessive", strip_possessive,
                  "Drop a trailing \"'s\" from mention surfaces");
    cmd->add_option("--stopwords", stopword_file,
                    "Stopword override file, one token per line "
                    "(IEVAL_STOPWORDS is honored when the flag is absent)");
  }

  NormalizationPolicy make() const {
    NormalizationPolicy policy;
    policy.case_sensitive = !case_insensitive;
    policy.type_sensitive = !type_insensitive;
    policy.strip_leading_article = strip_article;
    policy.strip_trailing_possessive = strip_possessive;
    std::string path = stopword_file;
    if (path.empty()) {
      if (const char* env = std::getenv("IEVAL_STOPWORDS")) path = env;
    }
    if (!path.empty()) policy.stopwords = load_stopword_file(path);
    return policy;
  }
};

struct OutputOptions {
  std::string out_path;
  std::string format = "json";

  void attach(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--out", out_path, "Output file (default stdout)");
    if (with_format) {
      cmd->add_option("--format", format, "Report format")
          ->check(CLI::IsMember({"json", "markdown", "csv"}));
    }
  }

  void write(const std::string& text) const { write_to(text, out_path); }

  static void write_to(const std::string& text, const std::string& path) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    }
    out << text;
  }
};

void print_warnings(const ScoreReport& report) {
  for (const std::string& warning : report.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
}

// Drops entities of the listed types, together with the relations and
// novelty labels attached to them.
void drop_entity_types(AnnotatedCorpus& corpus,
                       std::optional<NoveltyAnnotations>& novelty,
                       const std::set<std::string>& types) {
  if (types.empty()) return;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto& entities = corpus.entities[i];
    std::vector<int> remap(entities.size(), -1);
    std::vector<EntityMention> kept;
    std::vector<std::string> kept_novelty;
    for (std::size_t e = 0; e < entities.size(); ++e) {
      if (types.count(entities[e].etype) > 0) continue;
      remap[e] = static_cast<int>(kept.size());
      kept.push_back(entities[e]);
      if (novelty) kept_novelty.push_back(novelty->entity_novelty[i][e]);
    }
    std::vector<RelationMention> kept_relations;
    std::vector<std::string> kept_rel_novelty;
    for (std::size_t r = 0; r < corpus.relations[i].size(); ++r) {
      RelationMention relation = corpus.relations[i][r];
      if (remap[static_cast<std::size_t>(relation.head)] < 0 ||
          remap[static_cast<std::size_t>(relation.tail)] < 0) {
        continue;
      }
      relation.head = remap[static_cast<std::size_t>(relation.head)];
      relation.tail = remap[static_cast<std::size_t>(relation.tail)];
      kept_relations.push_back(relation);
      if (novelty) kept_rel_novelty.push_back(novelty->relation_novelty[i][r]);
    }
    entities = std::move(kept);
    corpus.relations[i] = std::move(kept_relations);
    if (novelty) {
      novelty->entity_novelty[i] = std::move(kept_novelty);
      novelty->relation_novelty[i] = std::move(kept_rel_novelty);
    }
  }
}

PartitionResult partition_from_annotations(const AnnotatedCorpus& corpus,
                                           const NoveltyAnnotations& novelty) {
  PartitionResult result;
  result.mention_novelty.resize(corpus.size());
  result.relation_novelty.resize(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (novelty.entity_novelty[i].size() != corpus.entities[i].size() ||
        novelty.relation_novelty[i].size() != corpus.relations[i].size()) {
      throw Error(ErrorCode::SchemaViolation,
                  "novelty arrays do not cover sentence '" +
                      corpus.sentences[i].sent_id + "'");
    }
    for (std::size_t e = 0; e < corpus.entities[i].size(); ++e) {
      const MentionNovelty klass =
          mention_novelty_from_string(novelty.entity_novelty[i][e]);
      result.mention_novelty[i].push_back(klass);
      result.mention_counts[klass] += 1;
      result.mention_counts_by_type[corpus.entities[i][e].etype][klass] += 1;
    }
    for (std::size_t r = 0; r < corpus.relations[i].size(); ++r) {
      const RelationNovelty klass =
          relation_novelty_from_string(novelty.relation_novelty[i][r]);
      result.relation_novelty[i].push_back(klass);
      result.relation_counts[klass] += 1;
      result.relation_counts_by_type[corpus.relations[i][r].rtype][klass] += 1;
    }
  }
  return result;
}

NoveltyAnnotations annotations_from_partition(const PartitionResult& partition) {
  NoveltyAnnotations out;
  for (const auto& row : partition.mention_novelty) {
    std::vector<std::string> labels;
    labels.reserve(row.size());
    for (MentionNovelty novelty : row) labels.emplace_back(to_string(novelty));
    out.entity_novelty.push_back(std::move(labels));
  }
  for (const auto& row : partition.relation_novelty) {
    std::vector<std::string> labels;
    labels.reserve(row.size());
    for (RelationNovelty novelty : row) labels.emplace_back(to_string(novelty));
    out.relation_novelty.push_back(std::move(labels));
  }
  return out;
}

bool corpus_has_relations(const AnnotatedCorpus& corpus) {
  for (const auto& relations : corpus.relations) {
    if (!relations.empty()) return true;
  }
  return false;
}

AnnotatedCorpus load_partition_file(const std::string& path,
                                    std::optional<NoveltyAnnotations>* novelty) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  AnnotatedCorpus corpus = parse_span_json(in, novelty);
  if (!novelty->has_value()) {
    throw Error(ErrorCode::SchemaViolation,
                "'" + path + "' carries no novelty annotations");
  }
  return corpus;
}

int run_validate(const std::string& input, const InputOptions& in_opts) {
  const AnnotatedCorpus corpus = in_opts.load(input, Role::Gold);
  const std::vector<Violation> violations = validate_corpus(corpus);
  long errors = 0;
  long warnings = 0;
  for (const Violation& violation : violations) {
    (violation.warning ? warnings : errors) += 1;
    std::cout << (violation.warning ? "WARN" : "ERROR") << ' '
              << violation.sent_id << ' ' << violation.code << ' '
              << violation.message << '\n';
  }
  std::cout << errors << " error(s), " << warnings << " warning(s)\n";
  return errors == 0 ? kExitOk : kExitValidation;
}

struct ScoreArgs {
  std::string gold_path;
  std::string pred_path;
  std::string train_path;
  std::string partition_file;
  std::string pred_partition_file;
  std::string average = "micro";
  bool relaxed = false;
  std::vector<std::string> ignore_types;
};

int run_score(const ScoreArgs& args, const InputOptions& in_opts,
              const PolicyOptions& policy_opts, const OutputOptions& out_opts) {
  std::optional<NoveltyAnnotations> gold_novelty;
  std::optional<NoveltyAnnotations> pred_novelty;
  AnnotatedCorpus gold =
      args.partition_file.empty()
          ? in_opts.load(args.gold_path, Role::Gold)
          : load_partition_file(args.partition_file, &gold_novelty);
  AnnotatedCorpus pred =
      args.pred_partition_file.empty()
          ? in_opts.load(args.pred_path, Role::Prediction)
          : load_partition_file(args.pred_partition_file, &pred_novelty);

  const std::set<std::string> ignored(args.ignore_types.begin(),
                                      args.ignore_types.end());
  drop_entity_types(gold, gold_novelty, ignored);
  drop_entity_types(pred, pred_novelty, ignored);

  std::optional<PartitionResult> gold_partition;
  std::optional<PartitionResult> pred_partition;
  if (!args.train_path.empty()) {
    const AnnotatedCorpus train = in_opts.load(args.train_path, Role::Train);
    const TrainIndex index = build_train_index(train, policy_opts.make());
    gold_partition = partition_corpus(index, gold);
    pred_partition = partition_corpus(index, pred);
  } else {
    if (gold_novelty) {
      gold_partition = partition_from_annotations(gold, *gold_novelty);
    }
    if (pred_novelty) {
      pred_partition = partition_from_annotations(pred, *pred_novelty);
    }
  }
  const PartitionResult* gold_part =
      gold_partition ? &*gold_partition : nullptr;
  const PartitionResult* pred_part =
      pred_partition ? &*pred_partition : nullptr;

  const Averaging averaging =
      args.average == "macro" ? Averaging::Macro : Averaging::Micro;

  EvaluationBundle bundle;
  bundle.ner = score_ner(gold, pred, averaging, gold_part, pred_part);
  print_warnings(bundle.ner);
  if (corpus_has_relations(gold) || corpus_has_relations(pred)) {
    // Strict and Boundaries are always reported together.
    bundle.re_strict = score_re(gold, pred, RECriterion::Strict, averaging,
                                gold_part, pred_part);
    bundle.re_boundaries = score_re(gold, pred, RECriterion::Boundaries,
                                    averaging, gold_part, pred_part);
    print_warnings(*bundle.re_strict);
    if (args.relaxed) {
      bundle.re_relaxed = score_re(gold, pred, RECriterion::Relaxed, averaging,
                                   gold_part, pred_part);
    }
  }
  out_opts.write(render_score(bundle, output_format_from_string(out_opts.format)));
  return kExitOk;
}

int main_impl(int argc, char** argv) {
  CLI::App app{
      "ieval — overlap-aware evaluation for NER and end-to-end relation "
      "extraction"};
  app.require_subcommand(1);
  // key=value file with one [subcommand] section per command; flags given on
  // the command line win over config values
  app.set_config("--config", "", "Read options from a config file");

  InputOptions in_opts;
  PolicyOptions policy_opts;

  // validate
  auto* validate_cmd =
      app.add_subcommand("validate", "Structural audit of a corpus file");
  std::string validate_input;
  validate_cmd->add_option("--input", validate_input, "Corpus file")
      ->required();
  InputOptions validate_in = in_opts;
  validate_in.attach(validate_cmd);

  // convert
  auto* convert_cmd = app.add_subcommand(
      "convert", "Convert between formats and tagging schemes");
  std::string convert_input;
  std::string convert_to = "json";
  std::string convert_to_scheme = "iobes";
  OutputOptions convert_out;
  convert_cmd->add_option("--input", convert_input, "Corpus file")->required();
  convert_cmd->add_option("--to", convert_to, "Target format")
      ->check(CLI::IsMember({"conll", "json"}));
  convert_cmd
      ->add_option("--to-scheme", convert_to_scheme,
                   "Target tagging scheme for CoNLL output")
      ->check(CLI::IsMember({"iob2", "iobes"}));
  convert_out.attach(convert_cmd, /*with_format=*/false);
  InputOptions convert_in = in_opts;
  convert_in.attach(convert_cmd);

  // partition
  auto* partition_cmd = app.add_subcommand(
      "partition", "Classify mentions and relations by lexical overlap");
  std::string partition_train, partition_eval, partition_summary;
  OutputOptions partition_out;
  partition_cmd->add_option("--train", partition_train, "Training corpus")
      ->required();
  partition_cmd->add_option("--eval", partition_eval, "Corpus to classify")
      ->required();
  partition_cmd->add_option("--summary", partition_summary,
                            "Write a summary JSON next to the main output");
  partition_out.attach(partition_cmd, /*with_format=*/false);
  InputOptions partition_in = in_opts;
  partition_in.attach(partition_cmd);
  PolicyOptions partition_policy = policy_opts;
  partition_policy.attach(partition_cmd);

  // score
  auto* score_cmd = app.add_subcommand(
      "score", "Score predictions against gold (NER and RE)");
  ScoreArgs score_args;
  score_cmd->add_option("--gold", score_args.gold_path, "Gold corpus");
  score_cmd->add_option("--pred", score_args.pred_path, "Predicted corpus");
  score_cmd->add_option("--train", score_args.train_path,
                        "Training corpus for novelty partitioning");
  score_cmd->add_option("--partition-file", score_args.partition_file,
                        "Partitioned gold corpus (replaces --gold)");
  score_cmd->add_option("--pred-partition-file",
                        score_args.pred_partition_file,
                        "Partitioned predictions (replaces --pred)");
  score_cmd->add_option("--average", score_args.average, "Averaging mode")
      ->check(CLI::IsMember({"micro", "macro"}));
  score_cmd->add_flag("--relaxed", score_args.relaxed,
                      "Additionally report the Relaxed RE criterion");
  score_cmd->add_option("--ignore-type", score_args.ignore_types,
                        "Entity type(s) to drop before scoring");
  OutputOptions score_out;
  score_out.attach(score_cmd);
  InputOptions score_in = in_opts;
  score_in.attach(score_cmd);
  PolicyOptions score_policy = policy_opts;
  score_policy.attach(score_cmd);

  // retention
  auto* retention_cmd = app.add_subcommand(
      "retention", "Memorization baseline predictions and score");
  std::string retention_train, retention_eval, retention_gold,
      retention_pred_out;
  bool retention_gold_mentions = false;
  bool retention_no_relations = false;
  retention_cmd->add_option("--train", retention_train, "Training corpus")
      ->required();
  retention_cmd->add_option("--eval", retention_eval, "Corpus to annotate")
      ->required();
  retention_cmd->add_option("--gold", retention_gold,
                            "Gold corpus; prints the baseline's score report");
  retention_cmd->add_flag("--gold-mentions", retention_gold_mentions,
                          "Predict relations over gold mentions");
  retention_cmd->add_flag("--no-relations", retention_no_relations,
                          "Skip the relation stage of the heuristic");
  retention_cmd->add_option("--pred-out", retention_pred_out,
                            "Also write predictions here when scoring");
  OutputOptions retention_out;
  retention_out.attach(retention_cmd);
  InputOptions retention_in = in_opts;
  retention_in.attach(retention_cmd);
  PolicyOptions retention_policy = policy_opts;
  retention_policy.attach(retention_cmd);

  // swap
  auto* swap_cmd = app.add_subcommand(
      "swap", "Generate or evaluate argument-swapped test sentences");
  std::string swap_gold, swap_pred, swap_skip_report;
  std::vector<std::string> swap_relations;
  bool swap_cross_type = false;
  swap_cmd->add_option("--gold", swap_gold, "Corpus to swap (or swapped gold)")
      ->required();
  swap_cmd->add_option("--relation", swap_relations, "Target relation type(s)")
      ->required();
  swap_cmd->add_flag("--allow-cross-type", swap_cross_type,
                     "Swap even when argument entity types differ");
  swap_cmd->add_option("--skip-report", swap_skip_report,
                       "Write skipped sentences and reasons here");
  swap_cmd->add_option("--pred", swap_pred,
                       "Predictions on the swapped corpus; switches to "
                       "evaluation mode");
  OutputOptions swap_out;
  swap_out.attach(swap_cmd);
  InputOptions swap_in = in_opts;
  swap_in.attach(swap_cmd);

  // stats
  auto* stats_cmd =
      app.add_subcommand("stats", "Dataset statistics and consistency profile");
  std::string stats_train, stats_eval;
  stats_cmd->add_option("--eval", stats_eval, "Corpus to describe")->required();
  stats_cmd->add_option("--train", stats_train,
                        "Training corpus for the consistency profile");
  OutputOptions stats_out;
  stats_out.attach(stats_cmd);
  InputOptions stats_in = in_opts;
  stats_in.attach(stats_cmd);
  PolicyOptions stats_policy = policy_opts;
  stats_policy.attach(stats_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    if (validate_cmd->parsed()) {
      return run_validate(validate_input, validate_in);
    }

    if (convert_cmd->parsed()) {
      const AnnotatedCorpus corpus = convert_in.load(convert_input, Role::Gold);
      if (convert_to == "json") {
        convert_out.write(to_span_json(corpus));
      } else {
        std::ostringstream out;
        write_conll(corpus, scheme_from_string(convert_to_scheme), out);
        convert_out.write(out.str());
      }
      return kExitOk;
    }

    if (partition_cmd->parsed()) {
      const AnnotatedCorpus train =
          partition_in.load(partition_train, Role::Train);
      const AnnotatedCorpus eval =
          partition_in.load(partition_eval, Role::Gold);
      const TrainIndex index =
          build_train_index(train, partition_policy.make());
      const PartitionResult partition = partition_corpus(index, eval);
      const NoveltyAnnotations annotations =
          annotations_from_partition(partition);
      partition_out.write(to_span_json(eval, &annotations));
      if (!partition_summary.empty()) {
        OutputOptions::write_to(render_partition_summary(partition),
                                partition_summary);
      }
      return kExitOk;
    }

    if (score_cmd->parsed()) {
      if ((score_args.gold_path.empty() && score_args.partition_file.empty()) ||
          (!score_args.gold_path.empty() &&
           !score_args.partition_file.empty()) ||
          (score_args.pred_path.empty() &&
           score_args.pred_partition_file.empty()) ||
          (!score_args.pred_path.empty() &&
           !score_args.pred_partition_file.empty())) {
        std::cerr << "score: need exactly one of --gold/--partition-file and "
                     "one of --pred/--pred-partition-file\n";
        return kExitBadFlags;
      }
      return run_score(score_args, score_in, score_policy, score_out);
    }

    if (retention_cmd->parsed()) {
      const AnnotatedCorpus train =
          retention_in.load(retention_train, Role::Train);
      const AnnotatedCorpus eval = retention_in.load(retention_eval, Role::Gold);
      const TrainIndex index = build_train_index(train, retention_policy.make());

      std::optional<AnnotatedCorpus> gold;
      if (!retention_gold.empty()) {
        gold = retention_in.load(retention_gold, Role::Gold);
      }
      if (retention_gold_mentions && !gold) {
        std::cerr << "retention: --gold-mentions requires --gold\n";
        return kExitBadFlags;
      }

      AnnotatedCorpus prediction;
      if (retention_gold_mentions) {
        prediction = *gold;
        prediction.role = Role::Prediction;
        for (auto& relations : prediction.relations) relations.clear();
      } else {
        prediction = retention_ner(index, eval);
      }
      if (!retention_no_relations) {
        prediction = retention_re(index, prediction);
      }

      if (gold) {
        const PartitionResult gold_partition = partition_corpus(index, *gold);
        const PartitionResult pred_partition =
            partition_corpus(index, prediction);
        EvaluationBundle bundle;
        bundle.ner = score_ner(*gold, prediction, Averaging::Micro,
                               &gold_partition, &pred_partition);
        if (corpus_has_relations(*gold) || corpus_has_relations(prediction)) {
          bundle.re_strict =
              score_re(*gold, prediction, RECriterion::Strict, Averaging::Micro,
                       &gold_partition, &pred_partition);
          bundle.re_boundaries =
              score_re(*gold, prediction, RECriterion::Boundaries,
                       Averaging::Micro, &gold_partition, &pred_partition);
        }
        retention_out.write(
            render_score(bundle, output_format_from_string(retention_out.format)));
        if (!retention_pred_out.empty()) {
          OutputOptions::write_to(to_span_json(prediction), retention_pred_out);
        }
      } else {
        retention_out.write(to_span_json(prediction));
      }
      return kExitOk;
    }

    if (swap_cmd->parsed()) {
      const AnnotatedCorpus gold = swap_in.load(swap_gold, Role::Gold);
      if (!swap_pred.empty()) {
        const AnnotatedCorpus pred = swap_in.load(swap_pred, Role::Prediction);
        std::vector<SwapReportRow> rows;
        for (const std::string& relation : swap_relations) {
          rows.push_back({relation, evaluate_swap(gold, pred, relation)});
        }
        swap_out.write(
            render_swap(rows, output_format_from_string(swap_out.format)));
        return kExitOk;
      }
      if (swap_relations.size() != 1) {
        std::cerr << "swap: generation takes exactly one --relation\n";
        return kExitBadFlags;
      }
      SwapSpec spec;
      spec.target_rtype = swap_relations.front();
      spec.require_same_etype = !swap_cross_type;
      const SwapResult result = swap_corpus(gold, spec);
      swap_out.write(to_span_json(result.swapped));
      if (!swap_skip_report.empty()) {
        OutputOptions::write_to(render_skip_report(result.skipped),
                                swap_skip_report);
      }
      return kExitOk;
    }

    if (stats_cmd->parsed()) {
      const NormalizationPolicy policy = stats_policy.make();
      const AnnotatedCorpus eval = stats_in.load(stats_eval, Role::Gold);
      StatsBundle bundle;
      bundle.eval = global_stats(eval, policy);
      if (!stats_train.empty()) {
        const AnnotatedCorpus train = stats_in.load(stats_train, Role::Train);
        bundle.train = global_stats(train, policy);
        const TrainIndex index = build_train_index(train, policy);
        bundle.consistency = consistency_profile(index, eval);
        bundle.overlap = overlap_table(index, eval);
      }
      stats_out.write(
          render_stats(bundle, output_format_from_string(stats_out.format)));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "ieval: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ieval: " << e.what() << '\n';
    return kExitFormat;
  }
  return kExitBadFlags;
}

}  // namespace

int main(int argc, char** argv) { return main_impl(argc, argv); }
