#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ieval/corpus.hpp"
#include "ieval/metrics.hpp"

namespace ieval {

struct SwapSpec {
  std::string target_rtype;
  bool require_same_etype = true;
};

struct SkipRecord {
  std::string sent_id;
  std::string reason;  // NO_TARGET, MULTIPLE_TARGET, TYPE_MISMATCH,
                       // OVERLAPPING_ARGS, STRADDLING_MENTION
};

struct EligibleTarget {
  std::size_t sentence_index = 0;
  std::size_t relation_index = 0;  // the single target relation
};

struct EligibilityResult {
  std::vector<EligibleTarget> eligible;
  std::vector<SkipRecord> skipped;
};

// Keeps sentences with exactly one relation of the target type whose
// arguments have equal entity types (when required) and disjoint spans,
// and where no other mention straddles a swapped segment boundary.
EligibilityResult eligible_sentences(const AnnotatedCorpus& corpus,
                                     const SwapSpec& spec);

struct SpanRemap {
  int old_start = 0;
  int old_end = 0;
  int new_start = 0;
  int new_end = 0;
};

struct SwappedSentence {
  Sentence sentence;
  std::vector<EntityMention> entities;
  std::vector<RelationMention> relations;
  std::vector<SpanRemap> remap;  // parallel to entities
};

// Exchanges the positions of the target relation's argument spans and
// swaps the relation's head/tail references, so the swapped sentence
// expresses the reversed fact. All other annotations are remapped by
// segment arithmetic. Throws Error(IneligibleSentence).
SwappedSentence swap_arguments(const Sentence& sentence,
                               const std::vector<EntityMention>& entities,
                               const std::vector<RelationMention>& relations,
                               std::size_t relation_index,
                               const SwapSpec& spec);

struct SwapResult {
  AnnotatedCorpus swapped;  // eligible sentences only, role Gold
  std::vector<std::vector<SpanRemap>> span_remap;  // per kept sentence
  std::vector<SkipRecord> skipped;
};

SwapResult swap_corpus(const AnnotatedCorpus& corpus, const SwapSpec& spec);

// NER over all entities; RE and revRE Strict, restricted to the target
// relation type. RE up, revRE down.
struct SwapEvaluation {
  PRF ner;
  PRF re;
  PRF revre;
  Counts ner_counts;
  Counts re_counts;
  Counts revre_counts;
};

SwapEvaluation evaluate_swap(const AnnotatedCorpus& swapped_gold,
                             const AnnotatedCorpus& pred,
                             const std::string& target_rtype);

}  // namespace ieval
