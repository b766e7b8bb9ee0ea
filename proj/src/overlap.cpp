#include "ieval/overlap.hpp"

#include <algorithm>

#include "ieval/error.hpp"

namespace ieval {

const char* to_string(MentionNovelty novelty) {
  switch (novelty) {
    case MentionNovelty::ExactMatch: return "exact";
    case MentionNovelty::PartialMatch: return "partial";
    case MentionNovelty::New: return "new";
  }
  return "?";
}

const char* to_string(RelationNovelty novelty) {
  switch (novelty) {
    case RelationNovelty::ExactMatch: return "exact";
    case RelationNovelty::PartialMatch: return "partial";
    case RelationNovelty::New: return "new";
  }
  return "?";
}

MentionNovelty mention_novelty_from_string(const std::string& name) {
  if (name == "exact") return MentionNovelty::ExactMatch;
  if (name == "partial") return MentionNovelty::PartialMatch;
  if (name == "new") return MentionNovelty::New;
  throw Error(ErrorCode::SchemaViolation, "unknown novelty class '" + name + "'");
}

RelationNovelty relation_novelty_from_string(const std::string& name) {
  if (name == "exact") return RelationNovelty::ExactMatch;
  if (name == "partial") return RelationNovelty::PartialMatch;
  if (name == "new") return RelationNovelty::New;
  throw Error(ErrorCode::SchemaViolation, "unknown novelty class '" + name + "'");
}

long TrainIndex::surface_count(const std::string& surface) const {
  auto it = surfaces_any_type.find(surface);
  if (it == surfaces_any_type.end()) return 0;
  long total = 0;
  for (const auto& [etype, count] : it->second) total += count;
  return total;
}

long TrainIndex::surface_count(const std::string& surface,
                               const std::string& etype) const {
  auto it = typed_surfaces.find({surface, etype});
  return it == typed_surfaces.end() ? 0 : it->second;
}

bool TrainIndex::surface_seen(const std::string& surface) const {
  return surfaces_any_type.count(surface) > 0;
}

namespace {

// Largest count wins; ties resolve to the lexicographically smallest label,
// which map iteration order yields with a strict comparison.
std::optional<std::string> majority_label(
    const std::map<std::string, long>& counts) {
  std::optional<std::string> best;
  long best_count = 0;
  for (const auto& [label, count] : counts) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

std::optional<std::string> TrainIndex::majority_etype(
    const std::string& surface) const {
  auto it = surfaces_any_type.find(surface);
  if (it == surfaces_any_type.end()) return std::nullopt;
  return majority_label(it->second);
}

std::optional<std::string> TrainIndex::majority_rtype(
    const std::string& head_surface, const std::string& tail_surface) const {
  auto it = surface_pair_relations.find({head_surface, tail_surface});
  if (it == surface_pair_relations.end()) return std::nullopt;
  return majority_label(it->second);
}

TrainIndex build_train_index(const AnnotatedCorpus& train,
                             const NormalizationPolicy& policy) {
  TrainIndex index;
  index.policy = policy;

  for (std::size_t i = 0; i < train.size(); ++i) {
    const Sentence& sentence = train.sentences[i];
    for (const std::string& token : sentence.tokens) {
      index.vocabulary.insert(token);
    }

    const auto& entities = train.entities[i];
    std::vector<std::string> surfaces(entities.size());
    for (std::size_t e = 0; e < entities.size(); ++e) {
      const EntityMention& mention = entities[e];
      const std::string surface = normalize_surface(
          std::span<const std::string>(sentence.tokens)
              .subspan(mention.start, mention.end - mention.start),
          policy);
      surfaces[e] = surface;

      index.typed_surfaces[{surface, mention.etype}] += 1;
      index.surfaces_any_type[surface][mention.etype] += 1;
      index.max_surface_tokens = std::max(
          index.max_surface_tokens,
          static_cast<std::size_t>(mention.end - mention.start));
      for (int t = mention.start; t < mention.end; ++t) {
        const std::string& token = sentence.tokens[static_cast<std::size_t>(t)];
        if (is_stopword(token, policy)) continue;
        index.token_types[normalize_token(token, policy)].insert(mention.etype);
      }
    }

    for (std::size_t a = 0; a < entities.size(); ++a) {
      for (std::size_t b = 0; b < entities.size(); ++b) {
        if (a == b) continue;
        index.pair_type_relation_counts[{entities[a].etype, entities[b].etype}]
            .pair_total += 1;
      }
    }

    for (const RelationMention& relation : train.relations[i]) {
      const std::string& head = surfaces[static_cast<std::size_t>(relation.head)];
      const std::string& tail = surfaces[static_cast<std::size_t>(relation.tail)];
      index.triples[{head, relation.rtype, tail}] += 1;
      index.head_args.insert({head, relation.rtype});
      index.tail_args.insert({tail, relation.rtype});
      index.surface_pair_relations[{head, tail}][relation.rtype] += 1;
      index
          .pair_type_relation_counts[{
              entities[static_cast<std::size_t>(relation.head)].etype,
              entities[static_cast<std::size_t>(relation.tail)].etype}]
          .relation_counts[relation.rtype] += 1;
    }
  }
  return index;
}

MentionNovelty classify_mention(const TrainIndex& index,
                                std::span<const std::string> sentence_tokens,
                                const EntityMention& mention) {
  const auto span = sentence_tokens.subspan(
      static_cast<std::size_t>(mention.start),
      static_cast<std::size_t>(mention.end - mention.start));
  const std::string surface = normalize_surface(span, index.policy);

  if (index.policy.type_sensitive) {
    if (index.typed_surfaces.count({surface, mention.etype}) > 0) {
      return MentionNovelty::ExactMatch;
    }
  } else if (index.surface_seen(surface)) {
    return MentionNovelty::ExactMatch;
  }

  for (const std::string& token : span) {
    if (is_stopword(token, index.policy)) continue;
    auto it = index.token_types.find(normalize_token(token, index.policy));
    if (it == index.token_types.end()) continue;
    if (!index.policy.type_sensitive || it->second.count(mention.etype) > 0) {
      return MentionNovelty::PartialMatch;
    }
  }
  return MentionNovelty::New;
}

MentionNovelty classify_mention(const TrainIndex& index,
                                const Sentence& sentence,
                                const EntityMention& mention) {
  return classify_mention(index, std::span<const std::string>(sentence.tokens),
                          mention);
}

RelationNovelty classify_relation(const TrainIndex& index,
                                  const std::string& head_surface_normalized,
                                  const std::string& rtype,
                                  const std::string& tail_surface_normalized) {
  if (index.triples.count(
          {head_surface_normalized, rtype, tail_surface_normalized}) > 0) {
    return RelationNovelty::ExactMatch;
  }
  if (index.head_args.count({head_surface_normalized, rtype}) > 0 ||
      index.tail_args.count({tail_surface_normalized, rtype}) > 0) {
    return RelationNovelty::PartialMatch;
  }
  return RelationNovelty::New;
}

RelationNovelty classify_relation(const TrainIndex& index,
                                  const Sentence& sentence,
                                  const std::vector<EntityMention>& entities,
                                  const RelationMention& relation) {
  const EntityMention& head = entities[static_cast<std::size_t>(relation.head)];
  const EntityMention& tail = entities[static_cast<std::size_t>(relation.tail)];
  auto normalized = [&](const EntityMention& mention) {
    return normalize_surface(
        std::span<const std::string>(sentence.tokens)
            .subspan(mention.start, mention.end - mention.start),
        index.policy);
  };
  return classify_relation(index, normalized(head), relation.rtype,
                           normalized(tail));
}

long PartitionResult::total_mentions() const {
  long total = 0;
  for (const auto& [novelty, count] : mention_counts) total += count;
  return total;
}

long PartitionResult::total_relations() const {
  long total = 0;
  for (const auto& [novelty, count] : relation_counts) total += count;
  return total;
}

double PartitionResult::mention_proportion(MentionNovelty novelty) const {
  const long total = total_mentions();
  if (total == 0) return 0.0;
  auto it = mention_counts.find(novelty);
  return it == mention_counts.end()
             ? 0.0
             : static_cast<double>(it->second) / static_cast<double>(total);
}

double PartitionResult::relation_proportion(RelationNovelty novelty) const {
  const long total = total_relations();
  if (total == 0) return 0.0;
  auto it = relation_counts.find(novelty);
  return it == relation_counts.end()
             ? 0.0
             : static_cast<double>(it->second) / static_cast<double>(total);
}

PartitionResult partition_corpus(const TrainIndex& index,
                                 const AnnotatedCorpus& corpus) {
  PartitionResult result;
  result.mention_novelty.resize(corpus.size());
  result.relation_novelty.resize(corpus.size());

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Sentence& sentence = corpus.sentences[i];
    const auto& entities = corpus.entities[i];
    auto& mention_row = result.mention_novelty[i];
    mention_row.reserve(entities.size());
    for (const EntityMention& mention : entities) {
      const MentionNovelty novelty = classify_mention(index, sentence, mention);
      mention_row.push_back(novelty);
      result.mention_counts[novelty] += 1;
      result.mention_counts_by_type[mention.etype][novelty] += 1;
    }
    auto& relation_row = result.relation_novelty[i];
    relation_row.reserve(corpus.relations[i].size());
    for (const RelationMention& relation : corpus.relations[i]) {
      const RelationNovelty novelty =
          classify_relation(index, sentence, entities, relation);
      relation_row.push_back(novelty);
      result.relation_counts[novelty] += 1;
      result.relation_counts_by_type[relation.rtype][novelty] += 1;
    }
  }
  return result;
}

}  // namespace ieval
