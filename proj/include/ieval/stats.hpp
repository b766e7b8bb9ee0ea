#pragma once

#include <map>
#include <string>

#include "ieval/corpus.hpp"
#include "ieval/normalize.hpp"
#include "ieval/overlap.hpp"

namespace ieval {

struct DatasetStats {
  long sentences = 0;
  long tokens = 0;
  long mention_occurrences = 0;
  long unique_mentions = 0;  // distinct (normalized surface, etype)
  long relations = 0;
};

DatasetStats global_stats(const AnnotatedCorpus& corpus,
                          const NormalizationPolicy& policy = {});

// Fraction of a surface's training occurrences carrying the queried type;
// zero for unseen surfaces.
double entity_consistency(const TrainIndex& index,
                          const std::string& normalized_surface,
                          const std::string& etype);
double entity_consistency(const TrainIndex& index, const Sentence& sentence,
                          const EntityMention& mention);

// Corpus-level averages relating overlap, ambiguity and relation structure.
// eCon = eCon_star * eLex and rCon = rCon_star * rLex hold exactly: unseen
// items contribute zero consistency.
struct ConsistencyProfile {
  double e_con = 0.0;       // mean entity label consistency, all mentions
  double e_con_star = 0.0;  // mean over mentions with a seen surface
  double e_lex = 0.0;       // fraction of mentions with a seen surface
  double e_len = 0.0;       // mean mention length (tokens)
  double r_con = 0.0;       // mean relation label consistency, all relations
  double r_con_star = 0.0;  // mean over exactly seen triples
  double r_lex = 0.0;       // exact-match triple proportion
  double a_con = 0.0;       // mean argument-type label consistency
  double a_len = 0.0;       // mean head length + tail length
  double a_dist = 0.0;      // mean tokens strictly between the arguments
  double vocab_transfer_rate = 0.0;
};

// Throws Error(EmptyEvalCorpus) when eval has no sentences.
ConsistencyProfile consistency_profile(const TrainIndex& index,
                                       const AnnotatedCorpus& eval);

// |eval vocabulary that appears in train| / |eval vocabulary|; vocabularies
// are case-sensitive token sets without repetition.
double vocabulary_transfer_rate(const AnnotatedCorpus& train,
                                const AnnotatedCorpus& eval);

// Proportions of mention occurrences per novelty class, per entity type
// and overall.
struct OverlapRow {
  long exact = 0;
  long partial = 0;
  long fresh = 0;  // "new" class

  long total() const { return exact + partial + fresh; }
};

struct OverlapTable {
  std::map<std::string, OverlapRow> per_type;
  OverlapRow all;
};

OverlapTable overlap_table(const TrainIndex& index,
                           const AnnotatedCorpus& corpus);

}  // namespace ieval
