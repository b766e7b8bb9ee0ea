#include "ieval/metrics.hpp"

#include <algorithm>
#include <tuple>

#include "ieval/error.hpp"

namespace ieval {

double harmonic_f1(double p, double r) {
  const double sum = p + r;
  if (sum <= 0.0) return 0.0;
  return 2.0 * p * r / sum;
}

PRF prf(const Counts& counts) {
  PRF out;
  const long pred_total = counts.tp + counts.fp;
  const long gold_total = counts.tp + counts.fn;
  out.precision = pred_total == 0 ? 0.0
                                  : static_cast<double>(counts.tp) /
                                        static_cast<double>(pred_total);
  out.recall = gold_total == 0 ? 0.0
                               : static_cast<double>(counts.tp) /
                                     static_cast<double>(gold_total);
  out.f1 = harmonic_f1(out.precision, out.recall);
  return out;
}

Counts sum_counts(const std::map<std::string, Counts>& per_label) {
  Counts total;
  for (const auto& [label, counts] : per_label) total += counts;
  return total;
}

PRF micro_average(const std::map<std::string, Counts>& per_label) {
  return prf(sum_counts(per_label));
}

PRF macro_average(const std::map<std::string, Counts>& per_label) {
  PRF out;
  long labels = 0;
  for (const auto& [label, counts] : per_label) {
    if (counts.gold_support() == 0) continue;
    const PRF scores = prf(counts);
    out.precision += scores.precision;
    out.recall += scores.recall;
    out.f1 += scores.f1;
    ++labels;
  }
  if (labels > 0) {
    out.precision /= static_cast<double>(labels);
    out.recall /= static_cast<double>(labels);
    out.f1 /= static_cast<double>(labels);
  }
  return out;
}

RECriterion criterion_from_string(const std::string& name) {
  if (name == "strict") return RECriterion::Strict;
  if (name == "boundaries") return RECriterion::Boundaries;
  if (name == "relaxed") return RECriterion::Relaxed;
  throw Error(ErrorCode::UnknownCriterion, "'" + name + "'");
}

const char* to_string(RECriterion criterion) {
  switch (criterion) {
    case RECriterion::Strict: return "strict";
    case RECriterion::Boundaries: return "boundaries";
    case RECriterion::Relaxed: return "relaxed";
  }
  return "?";
}

const char* to_string(Averaging averaging) {
  return averaging == Averaging::Micro ? "micro" : "macro";
}

PRF NoveltyBucket::scores() const {
  PRF out;
  const long pred_total = tp_precision + fp;
  const long gold_total = tp_recall + fn;
  out.precision = pred_total == 0 ? 0.0
                                  : static_cast<double>(tp_precision) /
                                        static_cast<double>(pred_total);
  out.recall = gold_total == 0 ? 0.0
                               : static_cast<double>(tp_recall) /
                                     static_cast<double>(gold_total);
  out.f1 = harmonic_f1(out.precision, out.recall);
  return out;
}

PRF ScoreReport::type_prf(const std::string& label) const {
  auto it = per_type.find(label);
  return it == per_type.end() ? PRF{} : prf(it->second);
}

namespace {

using EntityKey = std::tuple<int, int, std::string>;

EntityKey entity_key(const EntityMention& mention) {
  return {mention.start, mention.end, mention.etype};
}

std::vector<EntityMention> dedup_entities(
    const std::vector<EntityMention>& mentions, const char* side,
    std::vector<std::string>* warnings) {
  std::vector<EntityMention> out;
  std::set<EntityKey> seen;
  for (const EntityMention& mention : mentions) {
    if (seen.insert(entity_key(mention)).second) {
      out.push_back(mention);
    } else if (warnings) {
      warnings->push_back(std::string("duplicate ") + side + " mention (" +
                          std::to_string(mention.start) + ", " +
                          std::to_string(mention.end) + ", " + mention.etype +
                          ") in sentence '" + mention.sent_id +
                          "' collapsed");
    }
  }
  return out;
}

}  // namespace

std::map<std::string, Counts> match_entities(
    const std::vector<EntityMention>& gold,
    const std::vector<EntityMention>& pred,
    std::vector<std::string>* warnings) {
  const std::vector<EntityMention> gold_set =
      dedup_entities(gold, "gold", warnings);
  const std::vector<EntityMention> pred_set =
      dedup_entities(pred, "predicted", warnings);

  std::set<EntityKey> gold_keys;
  for (const EntityMention& mention : gold_set)
    gold_keys.insert(entity_key(mention));
  std::set<EntityKey> pred_keys;
  for (const EntityMention& mention : pred_set)
    pred_keys.insert(entity_key(mention));

  std::map<std::string, Counts> counts;
  for (const EntityMention& mention : gold_set) {
    if (pred_keys.count(entity_key(mention)) > 0) {
      counts[mention.etype].tp += 1;
    } else {
      counts[mention.etype].fn += 1;
    }
  }
  for (const EntityMention& mention : pred_set) {
    if (gold_keys.count(entity_key(mention)) == 0) {
      counts[mention.etype].fp += 1;
    }
  }
  return counts;
}

namespace {

// A relation with its resolved argument mentions and optional novelty.
struct RelItem {
  const RelationMention* relation = nullptr;
  const EntityMention* head = nullptr;
  const EntityMention* tail = nullptr;
  RelationNovelty novelty = RelationNovelty::New;
  bool has_novelty = false;
};

// Full identity of a relation: argument spans and types plus relation type.
using RelKey = std::tuple<int, int, std::string, int, int, std::string,
                          std::string>;

RelKey strict_key(const RelItem& item) {
  return {item.head->start, item.head->end, item.head->etype,
          item.tail->start, item.tail->end, item.tail->etype,
          item.relation->rtype};
}

RelKey boundaries_key(const RelItem& item) {
  return {item.head->start, item.head->end, std::string(),
          item.tail->start,  item.tail->end, std::string(),
          item.relation->rtype};
}

// Direction-reversed strict identity: tail mention plays the head role.
RelKey reversed_strict_key(const RelItem& item) {
  return {item.tail->start, item.tail->end, item.tail->etype,
          item.head->start, item.head->end, item.head->etype,
          item.relation->rtype};
}

std::vector<RelItem> build_rel_items(
    const std::vector<EntityMention>& entities,
    const std::vector<RelationMention>& relations,
    const std::vector<RelationNovelty>* novelty,
    const std::string* restrict_rtype) {
  std::vector<RelItem> out;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const RelationMention& relation = relations[i];
    if (restrict_rtype && relation.rtype != *restrict_rtype) continue;
    RelItem item;
    item.relation = &relation;
    item.head = &entities[static_cast<std::size_t>(relation.head)];
    item.tail = &entities[static_cast<std::size_t>(relation.tail)];
    if (novelty) {
      item.novelty = (*novelty)[i];
      item.has_novelty = true;
    }
    out.push_back(item);
  }
  return out;
}

std::vector<RelItem> dedup_rel_items(const std::vector<RelItem>& items,
                                     const char* side,
                                     std::vector<std::string>* warnings) {
  std::vector<RelItem> out;
  std::set<RelKey> seen;
  for (const RelItem& item : items) {
    if (seen.insert(strict_key(item)).second) {
      out.push_back(item);
    } else if (warnings) {
      warnings->push_back(std::string("duplicate ") + side + " relation " +
                          item.relation->rtype + " in sentence '" +
                          item.relation->sent_id + "' collapsed");
    }
  }
  return out;
}

bool relaxed_argument_match(const EntityMention& pred_arg,
                            const EntityMention& gold_arg) {
  // At least one gold-argument token covered with the gold argument's type.
  return pred_arg.etype == gold_arg.etype &&
         pred_arg.start < gold_arg.end && gold_arg.start < pred_arg.end;
}

struct SentenceRelationOutcome {
  std::map<std::string, Counts> counts;           // per rtype
  std::vector<std::pair<RelationNovelty, bool>> gold_outcomes;  // matched?
  std::vector<std::pair<RelationNovelty, bool>> pred_outcomes;
  bool has_novelty = false;
};

SentenceRelationOutcome match_relations_impl(
    std::vector<RelItem> gold_items, std::vector<RelItem> pred_items,
    RECriterion criterion, std::vector<std::string>* warnings) {
  SentenceRelationOutcome outcome;
  gold_items = dedup_rel_items(gold_items, "gold", warnings);
  pred_items = dedup_rel_items(pred_items, "predicted", warnings);
  outcome.has_novelty =
      (!gold_items.empty() && gold_items.front().has_novelty) ||
      (!pred_items.empty() && pred_items.front().has_novelty);

  std::vector<bool> gold_matched(gold_items.size(), false);
  std::vector<bool> pred_matched(pred_items.size(), false);

  if (criterion == RECriterion::Relaxed) {
    // Ties resolve by leftmost gold argument first.
    std::vector<std::size_t> gold_order(gold_items.size());
    for (std::size_t i = 0; i < gold_order.size(); ++i) gold_order[i] = i;
    std::sort(gold_order.begin(), gold_order.end(),
              [&](std::size_t a, std::size_t b) {
                return strict_key(gold_items[a]) < strict_key(gold_items[b]);
              });
    for (std::size_t gi : gold_order) {
      const RelItem& gold = gold_items[gi];
      for (std::size_t pi = 0; pi < pred_items.size(); ++pi) {
        if (pred_matched[pi]) continue;
        const RelItem& pred = pred_items[pi];
        if (pred.relation->rtype != gold.relation->rtype) continue;
        if (relaxed_argument_match(*pred.head, *gold.head) &&
            relaxed_argument_match(*pred.tail, *gold.tail)) {
          gold_matched[gi] = true;
          pred_matched[pi] = true;
          break;
        }
      }
    }
  } else {
    auto key_of = criterion == RECriterion::Strict ? strict_key
                                                   : boundaries_key;
    std::map<RelKey, long> available;
    for (const RelItem& item : gold_items) available[key_of(item)] += 1;
    // One-to-one over identical keys, in prediction order.
    std::map<RelKey, long> taken;
    for (std::size_t pi = 0; pi < pred_items.size(); ++pi) {
      const RelKey key = key_of(pred_items[pi]);
      auto it = available.find(key);
      if (it != available.end() && taken[key] < it->second) {
        taken[key] += 1;
        pred_matched[pi] = true;
      }
    }
    std::map<RelKey, long> credited;
    for (std::size_t gi = 0; gi < gold_items.size(); ++gi) {
      const RelKey key = key_of(gold_items[gi]);
      auto it = taken.find(key);
      if (it != taken.end() && credited[key] < it->second) {
        credited[key] += 1;
        gold_matched[gi] = true;
      }
    }
  }

  for (std::size_t gi = 0; gi < gold_items.size(); ++gi) {
    const RelItem& item = gold_items[gi];
    if (gold_matched[gi]) {
      outcome.counts[item.relation->rtype].tp += 1;
    } else {
      outcome.counts[item.relation->rtype].fn += 1;
    }
    outcome.gold_outcomes.push_back({item.novelty, gold_matched[gi]});
  }
  for (std::size_t pi = 0; pi < pred_items.size(); ++pi) {
    const RelItem& item = pred_items[pi];
    if (!pred_matched[pi]) {
      outcome.counts[item.relation->rtype].fp += 1;
    }
    outcome.pred_outcomes.push_back({item.novelty, pred_matched[pi]});
  }
  return outcome;
}

}  // namespace

std::map<std::string, Counts> match_relations(
    const std::vector<EntityMention>& gold_entities,
    const std::vector<RelationMention>& gold_relations,
    const std::vector<EntityMention>& pred_entities,
    const std::vector<RelationMention>& pred_relations, RECriterion criterion,
    std::vector<std::string>* warnings) {
  return match_relations_impl(
             build_rel_items(gold_entities, gold_relations, nullptr, nullptr),
             build_rel_items(pred_entities, pred_relations, nullptr, nullptr),
             criterion, warnings)
      .counts;
}

std::vector<std::pair<std::size_t, std::size_t>> align_sentences(
    const AnnotatedCorpus& gold, const AnnotatedCorpus& pred) {
  const auto pred_index = sentence_index(pred);
  sentence_index(gold);  // duplicate-id check
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::SentenceMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " sentences, prediction has " +
                    std::to_string(pred.size()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(gold.size());
  for (std::size_t gi = 0; gi < gold.size(); ++gi) {
    const Sentence& sentence = gold.sentences[gi];
    auto it = pred_index.find(sentence.sent_id);
    if (it == pred_index.end()) {
      throw Error(ErrorCode::SentenceMismatch,
                  "sentence '" + sentence.sent_id + "' missing from prediction");
    }
    if (pred.sentences[it->second].tokens != sentence.tokens) {
      throw Error(ErrorCode::SentenceMismatch,
                  "tokens differ in sentence '" + sentence.sent_id + "'");
    }
    pairs.push_back({gi, it->second});
  }
  return pairs;
}

namespace {

const char* novelty_bucket_name(MentionNovelty novelty) {
  return to_string(novelty);
}
const char* novelty_bucket_name(RelationNovelty novelty) {
  return to_string(novelty);
}

void finalize_report(ScoreReport& report) {
  report.overall = sum_counts(report.per_type);
  report.overall_prf = report.averaging == Averaging::Micro
                           ? micro_average(report.per_type)
                           : macro_average(report.per_type);
}

}  // namespace

ScoreReport score_ner(const AnnotatedCorpus& gold, const AnnotatedCorpus& pred,
                      Averaging averaging,
                      const PartitionResult* gold_partition,
                      const PartitionResult* pred_partition) {
  ScoreReport report;
  report.task = "ner";
  report.criterion = "exact";
  report.averaging = averaging;

  for (const auto& [gi, pi] : align_sentences(gold, pred)) {
    const auto gold_set =
        dedup_entities(gold.entities[gi], "gold", &report.warnings);
    const auto pred_set =
        dedup_entities(pred.entities[pi], "predicted", &report.warnings);
    std::set<EntityKey> gold_keys;
    for (const EntityMention& mention : gold_set)
      gold_keys.insert(entity_key(mention));
    std::set<EntityKey> pred_keys;
    for (const EntityMention& mention : pred_set)
      pred_keys.insert(entity_key(mention));

    // Novelty vectors are parallel to the raw annotation lists; identical
    // duplicates classify identically, so lookup by key is safe.
    auto novelty_of = [&](const PartitionResult* partition, std::size_t si,
                          const std::vector<EntityMention>& raw,
                          const EntityMention& mention) {
      const auto& row = partition->mention_novelty[si];
      for (std::size_t k = 0; k < raw.size(); ++k) {
        if (entity_key(raw[k]) == entity_key(mention)) return row[k];
      }
      return MentionNovelty::New;  // unreachable
    };

    for (const EntityMention& mention : gold_set) {
      const bool matched = pred_keys.count(entity_key(mention)) > 0;
      auto& counts = report.per_type[mention.etype];
      if (matched) counts.tp += 1; else counts.fn += 1;
      if (gold_partition) {
        auto& bucket = report.per_novelty[novelty_bucket_name(
            novelty_of(gold_partition, gi, gold.entities[gi], mention))];
        if (matched) bucket.tp_recall += 1; else bucket.fn += 1;
      }
    }
    for (const EntityMention& mention : pred_set) {
      const bool matched = gold_keys.count(entity_key(mention)) > 0;
      if (!matched) report.per_type[mention.etype].fp += 1;
      if (pred_partition) {
        auto& bucket = report.per_novelty[novelty_bucket_name(
            novelty_of(pred_partition, pi, pred.entities[pi], mention))];
        if (matched) bucket.tp_precision += 1; else bucket.fp += 1;
      }
    }
  }
  finalize_report(report);
  return report;
}

ScoreReport score_re(const AnnotatedCorpus& gold, const AnnotatedCorpus& pred,
                     RECriterion criterion, Averaging averaging,
                     const PartitionResult* gold_partition,
                     const PartitionResult* pred_partition,
                     const std::string* restrict_rtype) {
  ScoreReport report;
  report.task = "re";
  report.criterion = to_string(criterion);
  report.averaging = averaging;

  for (const auto& [gi, pi] : align_sentences(gold, pred)) {
    const SentenceRelationOutcome outcome = match_relations_impl(
        build_rel_items(gold.entities[gi], gold.relations[gi],
                        gold_partition ? &gold_partition->relation_novelty[gi]
                                       : nullptr,
                        restrict_rtype),
        build_rel_items(pred.entities[pi], pred.relations[pi],
                        pred_partition ? &pred_partition->relation_novelty[pi]
                                       : nullptr,
                        restrict_rtype),
        criterion, &report.warnings);
    for (const auto& [rtype, counts] : outcome.counts) {
      report.per_type[rtype] += counts;
    }
    if (gold_partition) {
      for (const auto& [novelty, matched] : outcome.gold_outcomes) {
        auto& bucket = report.per_novelty[novelty_bucket_name(novelty)];
        if (matched) bucket.tp_recall += 1; else bucket.fn += 1;
      }
    }
    if (pred_partition) {
      for (const auto& [novelty, matched] : outcome.pred_outcomes) {
        auto& bucket = report.per_novelty[novelty_bucket_name(novelty)];
        if (matched) bucket.tp_precision += 1; else bucket.fp += 1;
      }
    }
  }
  finalize_report(report);
  return report;
}

ScoreReport partitioned_score_ner(const AnnotatedCorpus& gold,
                                  const AnnotatedCorpus& pred,
                                  const TrainIndex& index,
                                  Averaging averaging) {
  const PartitionResult gold_partition = partition_corpus(index, gold);
  const PartitionResult pred_partition = partition_corpus(index, pred);
  return score_ner(gold, pred, averaging, &gold_partition, &pred_partition);
}

ScoreReport partitioned_score_re(const AnnotatedCorpus& gold,
                                 const AnnotatedCorpus& pred,
                                 const TrainIndex& index, RECriterion criterion,
                                 Averaging averaging) {
  const PartitionResult gold_partition = partition_corpus(index, gold);
  const PartitionResult pred_partition = partition_corpus(index, pred);
  return score_re(gold, pred, criterion, averaging, &gold_partition,
                  &pred_partition);
}

PRF reverse_relation_score(const AnnotatedCorpus& swapped_gold,
                           const AnnotatedCorpus& pred,
                           const std::string& target_rtype,
                           Counts* counts_out) {
  Counts total;
  for (const auto& [gi, pi] : align_sentences(swapped_gold, pred)) {
    const auto gold_items =
        dedup_rel_items(build_rel_items(swapped_gold.entities[gi],
                                        swapped_gold.relations[gi], nullptr,
                                        &target_rtype),
                        "gold", nullptr);
    const auto pred_items =
        dedup_rel_items(build_rel_items(pred.entities[pi], pred.relations[pi],
                                        nullptr, &target_rtype),
                        "predicted", nullptr);
    std::map<RelKey, long> reversed_gold;
    for (const RelItem& item : gold_items) {
      reversed_gold[reversed_strict_key(item)] += 1;
    }
    std::map<RelKey, long> predicted;
    for (const RelItem& item : pred_items) {
      predicted[strict_key(item)] += 1;
    }
    long tp = 0;
    for (const auto& [key, count] : reversed_gold) {
      auto it = predicted.find(key);
      if (it != predicted.end()) tp += std::min(count, it->second);
    }
    total.tp += tp;
    total.fp += static_cast<long>(pred_items.size()) - tp;
    total.fn += static_cast<long>(gold_items.size()) - tp;
  }
  if (counts_out) *counts_out = total;
  return prf(total);
}

}  // namespace ieval
