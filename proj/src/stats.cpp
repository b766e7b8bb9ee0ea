#include "ieval/stats.hpp"

#include <algorithm>
#include <set>

#include "ieval/error.hpp"

namespace ieval {

DatasetStats global_stats(const AnnotatedCorpus& corpus,
                          const NormalizationPolicy& policy) {
  DatasetStats stats;
  std::set<std::pair<std::string, std::string>> unique;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Sentence& sentence = corpus.sentences[i];
    stats.sentences += 1;
    stats.tokens += static_cast<long>(sentence.tokens.size());
    for (const EntityMention& mention : corpus.entities[i]) {
      stats.mention_occurrences += 1;
      unique.emplace(
          normalize_surface(std::span<const std::string>(sentence.tokens)
                                .subspan(mention.start,
                                         mention.end - mention.start),
                            policy),
          mention.etype);
    }
    stats.relations += static_cast<long>(corpus.relations[i].size());
  }
  stats.unique_mentions = static_cast<long>(unique.size());
  return stats;
}

double entity_consistency(const TrainIndex& index,
                          const std::string& normalized_surface,
                          const std::string& etype) {
  const long total = index.surface_count(normalized_surface);
  if (total == 0) return 0.0;
  return static_cast<double>(index.surface_count(normalized_surface, etype)) /
         static_cast<double>(total);
}

double entity_consistency(const TrainIndex& index, const Sentence& sentence,
                          const EntityMention& mention) {
  return entity_consistency(
      index,
      normalize_surface(std::span<const std::string>(sentence.tokens)
                            .subspan(mention.start,
                                     mention.end - mention.start),
                        index.policy),
      mention.etype);
}

namespace {

double ratio(double numerator, long denominator) {
  return denominator == 0 ? 0.0 : numerator / static_cast<double>(denominator);
}

}  // namespace

ConsistencyProfile consistency_profile(const TrainIndex& index,
                                       const AnnotatedCorpus& eval) {
  if (eval.size() == 0) {
    throw Error(ErrorCode::EmptyEvalCorpus,
                "consistency profile of an empty corpus");
  }
  ConsistencyProfile profile;

  long mentions = 0;
  long seen_mentions = 0;
  double consistency_sum = 0.0;
  long length_sum = 0;

  long relations = 0;
  long seen_triples = 0;
  double triple_consistency_sum = 0.0;
  double arg_consistency_sum = 0.0;
  long arg_length_sum = 0;
  long arg_distance_sum = 0;

  long eval_vocab = 0;
  long shared_vocab = 0;
  std::set<std::string> seen_tokens;

  for (std::size_t i = 0; i < eval.size(); ++i) {
    const Sentence& sentence = eval.sentences[i];
    for (const std::string& token : sentence.tokens) {
      if (seen_tokens.insert(token).second) {
        ++eval_vocab;
        if (index.vocabulary.count(token) > 0) ++shared_vocab;
      }
    }

    const auto& entities = eval.entities[i];
    std::vector<std::string> surfaces(entities.size());
    for (std::size_t e = 0; e < entities.size(); ++e) {
      const EntityMention& mention = entities[e];
      surfaces[e] = normalize_surface(
          std::span<const std::string>(sentence.tokens)
              .subspan(mention.start, mention.end - mention.start),
          index.policy);
      ++mentions;
      length_sum += mention.end - mention.start;
      if (index.surface_seen(surfaces[e])) ++seen_mentions;
      consistency_sum += entity_consistency(index, surfaces[e], mention.etype);
    }

    for (const RelationMention& relation : eval.relations[i]) {
      const EntityMention& head =
          entities[static_cast<std::size_t>(relation.head)];
      const EntityMention& tail =
          entities[static_cast<std::size_t>(relation.tail)];
      const std::string& head_surface =
          surfaces[static_cast<std::size_t>(relation.head)];
      const std::string& tail_surface =
          surfaces[static_cast<std::size_t>(relation.tail)];
      ++relations;

      // Triple label consistency: occurrences of this (head, rtype, tail)
      // over all training relations between the same surfaces.
      long pair_total = 0;
      auto pair_it =
          index.surface_pair_relations.find({head_surface, tail_surface});
      if (pair_it != index.surface_pair_relations.end()) {
        for (const auto& [rtype, count] : pair_it->second) pair_total += count;
      }
      auto triple_it =
          index.triples.find({head_surface, relation.rtype, tail_surface});
      const long triple_count =
          triple_it == index.triples.end() ? 0 : triple_it->second;
      if (triple_count > 0) {
        ++seen_triples;
        triple_consistency_sum += static_cast<double>(triple_count) /
                                  static_cast<double>(pair_total);
      }

      auto type_it = index.pair_type_relation_counts.find(
          {head.etype, tail.etype});
      if (type_it != index.pair_type_relation_counts.end() &&
          type_it->second.pair_total > 0) {
        auto count_it = type_it->second.relation_counts.find(relation.rtype);
        const long matching = count_it == type_it->second.relation_counts.end()
                                  ? 0
                                  : count_it->second;
        arg_consistency_sum += static_cast<double>(matching) /
                               static_cast<double>(type_it->second.pair_total);
      }

      arg_length_sum += (head.end - head.start) + (tail.end - tail.start);
      const EntityMention& first = head.start <= tail.start ? head : tail;
      const EntityMention& second = head.start <= tail.start ? tail : head;
      arg_distance_sum += std::max(0, second.start - first.end);
    }
  }

  profile.e_con = ratio(consistency_sum, mentions);
  profile.e_con_star = ratio(consistency_sum, seen_mentions);
  profile.e_lex = ratio(static_cast<double>(seen_mentions), mentions);
  profile.e_len = ratio(static_cast<double>(length_sum), mentions);
  profile.r_con = ratio(triple_consistency_sum, relations);
  profile.r_con_star = ratio(triple_consistency_sum, seen_triples);
  profile.r_lex = ratio(static_cast<double>(seen_triples), relations);
  profile.a_con = ratio(arg_consistency_sum, relations);
  profile.a_len = ratio(static_cast<double>(arg_length_sum), relations);
  profile.a_dist = ratio(static_cast<double>(arg_distance_sum), relations);
  profile.vocab_transfer_rate =
      ratio(static_cast<double>(shared_vocab), eval_vocab);
  return profile;
}

double vocabulary_transfer_rate(const AnnotatedCorpus& train,
                                const AnnotatedCorpus& eval) {
  if (eval.size() == 0) {
    throw Error(ErrorCode::EmptyEvalCorpus,
                "vocabulary transfer rate of an empty corpus");
  }
  std::set<std::string> train_vocab;
  for (const Sentence& sentence : train.sentences) {
    train_vocab.insert(sentence.tokens.begin(), sentence.tokens.end());
  }
  std::set<std::string> eval_vocab;
  for (const Sentence& sentence : eval.sentences) {
    eval_vocab.insert(sentence.tokens.begin(), sentence.tokens.end());
  }
  if (eval_vocab.empty()) return 0.0;
  long shared = 0;
  for (const std::string& token : eval_vocab) {
    if (train_vocab.count(token) > 0) ++shared;
  }
  return static_cast<double>(shared) / static_cast<double>(eval_vocab.size());
}

OverlapTable overlap_table(const TrainIndex& index,
                           const AnnotatedCorpus& corpus) {
  OverlapTable table;
  const PartitionResult partition = partition_corpus(index, corpus);
  for (const auto& [etype, counts] : partition.mention_counts_by_type) {
    OverlapRow& row = table.per_type[etype];
    for (const auto& [novelty, count] : counts) {
      switch (novelty) {
        case MentionNovelty::ExactMatch: row.exact += count; break;
        case MentionNovelty::PartialMatch: row.partial += count; break;
        case MentionNovelty::New: row.fresh += count; break;
      }
      switch (novelty) {
        case MentionNovelty::ExactMatch: table.all.exact += count; break;
        case MentionNovelty::PartialMatch: table.all.partial += count; break;
        case MentionNovelty::New: table.all.fresh += count; break;
      }
    }
  }
  return table;
}

}  // namespace ieval
