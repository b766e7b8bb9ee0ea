#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ieval/corpus.hpp"
#include "ieval/normalize.hpp"

namespace ieval {

enum class MentionNovelty { ExactMatch, PartialMatch, New };
enum class RelationNovelty { ExactMatch, PartialMatch, New };

const char* to_string(MentionNovelty novelty);
const char* to_string(RelationNovelty novelty);
MentionNovelty mention_novelty_from_string(const std::string& name);
RelationNovelty relation_novelty_from_string(const std::string& name);

// Lookup structures over a training corpus. All surfaces are stored
// post-normalization under the policy; immutable after build.
struct TrainIndex {
  NormalizationPolicy policy;

  // (surface, etype) -> occurrence count
  std::map<std::pair<std::string, std::string>, long> typed_surfaces;
  // surface -> etype -> occurrence count
  std::map<std::string, std::map<std::string, long>> surfaces_any_type;
  // non-stopword token -> entity types it occurs under within mentions
  std::map<std::string, std::set<std::string>> token_types;
  // (head surface, rtype, tail surface) -> count
  std::map<std::tuple<std::string, std::string, std::string>, long> triples;
  // argument surfaces by position
  std::set<std::pair<std::string, std::string>> head_args;  // (surface, rtype)
  std::set<std::pair<std::string, std::string>> tail_args;
  // (head surface, tail surface) -> rtype -> count; backs the retention
  // heuristic's pair lookup
  std::map<std::pair<std::string, std::string>, std::map<std::string, long>>
      surface_pair_relations;

  // (head etype, tail etype) -> co-occurring ordered pair total and
  // per-rtype relation counts; denominator and numerator of aCon
  struct PairTypeStats {
    long pair_total = 0;
    std::map<std::string, long> relation_counts;
  };
  std::map<std::pair<std::string, std::string>, PairTypeStats>
      pair_type_relation_counts;

  // full training token vocabulary (case-sensitive, unnormalized)
  std::set<std::string> vocabulary;

  std::size_t max_surface_tokens = 0;

  long surface_count(const std::string& surface) const;  // any type
  long surface_count(const std::string& surface, const std::string& etype) const;
  bool surface_seen(const std::string& surface) const;
  // Majority label; ties broken by lexicographic order of the label.
  std::optional<std::string> majority_etype(const std::string& surface) const;
  std::optional<std::string> majority_rtype(const std::string& head_surface,
                                            const std::string& tail_surface) const;
};

TrainIndex build_train_index(const AnnotatedCorpus& train,
                             const NormalizationPolicy& policy = {});

MentionNovelty classify_mention(const TrainIndex& index,
                                std::span<const std::string> sentence_tokens,
                                const EntityMention& mention);
MentionNovelty classify_mention(const TrainIndex& index,
                                const Sentence& sentence,
                                const EntityMention& mention);

RelationNovelty classify_relation(const TrainIndex& index,
                                  const std::string& head_surface_normalized,
                                  const std::string& rtype,
                                  const std::string& tail_surface_normalized);
RelationNovelty classify_relation(const TrainIndex& index,
                                  const Sentence& sentence,
                                  const std::vector<EntityMention>& entities,
                                  const RelationMention& relation);

// Novelty assignment for every mention and relation of a corpus, plus
// aggregate counts and proportions (zero when there is nothing to count).
struct PartitionResult {
  std::vector<std::vector<MentionNovelty>> mention_novelty;    // per sentence
  std::vector<std::vector<RelationNovelty>> relation_novelty;  // per sentence

  std::map<MentionNovelty, long> mention_counts;
  std::map<RelationNovelty, long> relation_counts;
  // etype -> novelty -> count over mention occurrences
  std::map<std::string, std::map<MentionNovelty, long>> mention_counts_by_type;
  std::map<std::string, std::map<RelationNovelty, long>> relation_counts_by_type;

  long total_mentions() const;
  long total_relations() const;
  double mention_proportion(MentionNovelty novelty) const;
  double relation_proportion(RelationNovelty novelty) const;
};

PartitionResult partition_corpus(const TrainIndex& index,
                                 const AnnotatedCorpus& corpus);

}  // namespace ieval
