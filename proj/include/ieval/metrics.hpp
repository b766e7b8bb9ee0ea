#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ieval/corpus.hpp"
#include "ieval/overlap.hpp"

namespace ieval {

struct Counts {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  Counts& operator+=(const Counts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  long gold_support() const { return tp + fn; }
};

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 2pr/(p+r), 0 when p+r = 0.
double harmonic_f1(double p, double r);

// P = tp/(tp+fp), R = tp/(tp+fn); every 0/0 evaluates to 0.
PRF prf(const Counts& counts);

Counts sum_counts(const std::map<std::string, Counts>& per_label);
// Pool counts across labels, then score.
PRF micro_average(const std::map<std::string, Counts>& per_label);
// Unweighted mean of per-label P, R and F1 over labels with gold support.
PRF macro_average(const std::map<std::string, Counts>& per_label);

enum class RECriterion { Strict, Boundaries, Relaxed };
enum class Averaging { Micro, Macro };

RECriterion criterion_from_string(const std::string& name);  // UnknownCriterion
const char* to_string(RECriterion criterion);
const char* to_string(Averaging averaging);

// Novelty bucket of a partitioned score. Recall-side counts bucket gold
// items by their novelty; precision-side counts bucket predicted items by
// the novelty of the prediction itself (a-posteriori).
struct NoveltyBucket {
  long tp_precision = 0;
  long fp = 0;
  long tp_recall = 0;
  long fn = 0;

  PRF scores() const;
  NoveltyBucket& operator+=(const NoveltyBucket& other) {
    tp_precision += other.tp_precision;
    fp += other.fp;
    tp_recall += other.tp_recall;
    fn += other.fn;
    return *this;
  }
};

struct ScoreReport {
  std::string task;  // "ner" or "re"
  std::string criterion;
  Averaging averaging = Averaging::Micro;
  Counts overall;
  PRF overall_prf;
  std::map<std::string, Counts> per_type;
  // keys "exact"/"partial"/"new"; empty when no partition was supplied
  std::map<std::string, NoveltyBucket> per_novelty;
  std::vector<std::string> warnings;

  PRF type_prf(const std::string& label) const;
};

// Exact (start, end, etype) set matching for one sentence pair. Exact
// duplicate predictions are collapsed before matching, with a warning.
std::map<std::string, Counts> match_entities(
    const std::vector<EntityMention>& gold,
    const std::vector<EntityMention>& pred,
    std::vector<std::string>* warnings = nullptr);

// Relation matching for one sentence pair under a criterion. Gold and
// predicted relations resolve against their own entity lists. One-to-one:
// each gold relation matches at most one prediction and vice versa.
std::map<std::string, Counts> match_relations(
    const std::vector<EntityMention>& gold_entities,
    const std::vector<RelationMention>& gold_relations,
    const std::vector<EntityMention>& pred_entities,
    const std::vector<RelationMention>& pred_relations,
    RECriterion criterion, std::vector<std::string>* warnings = nullptr);

// Positional alignment of two corpora sharing sentence ids and tokens.
// Throws Error(SentenceMismatch) when the sentence sets or tokens differ.
std::vector<std::pair<std::size_t, std::size_t>> align_sentences(
    const AnnotatedCorpus& gold, const AnnotatedCorpus& pred);

// Corpus-level scores. When gold/pred partitions are supplied the report
// carries per-novelty buckets; restrict_rtype limits relation scoring to
// one relation type.
ScoreReport score_ner(const AnnotatedCorpus& gold, const AnnotatedCorpus& pred,
                      Averaging averaging = Averaging::Micro,
                      const PartitionResult* gold_partition = nullptr,
                      const PartitionResult* pred_partition = nullptr);

ScoreReport score_re(const AnnotatedCorpus& gold, const AnnotatedCorpus& pred,
                     RECriterion criterion,
                     Averaging averaging = Averaging::Micro,
                     const PartitionResult* gold_partition = nullptr,
                     const PartitionResult* pred_partition = nullptr,
                     const std::string* restrict_rtype = nullptr);

// Convenience: partitions gold and pred against the index, then scores.
ScoreReport partitioned_score_ner(const AnnotatedCorpus& gold,
                                  const AnnotatedCorpus& pred,
                                  const TrainIndex& index,
                                  Averaging averaging = Averaging::Micro);
ScoreReport partitioned_score_re(const AnnotatedCorpus& gold,
                                 const AnnotatedCorpus& pred,
                                 const TrainIndex& index, RECriterion criterion,
                                 Averaging averaging = Averaging::Micro);

// Strict-criterion score of predictions against the direction-reversed
// target relations of an argument-swapped gold corpus. Lower is better.
PRF reverse_relation_score(const AnnotatedCorpus& swapped_gold,
                           const AnnotatedCorpus& pred,
                           const std::string& target_rtype,
                           Counts* counts_out = nullptr);

}  // namespace ieval
