#include "ieval/behavior.hpp"

#include <algorithm>

#include "ieval/error.hpp"

namespace ieval {

namespace {

struct SwapGeometry {
  // Earlier and later argument spans in sentence order.
  int s1 = 0, e1 = 0, s2 = 0, e2 = 0;
  int delta = 0;  // later length minus earlier length

  int remap_pos(int p) const {
    if (p < s1) return p;
    if (p < e1) return p + (s2 - s1 + delta);
    if (p < s2) return p + delta;
    if (p < e2) return p - s2 + s1;
    return p;
  }

  bool fits_one_segment(int start, int end) const {
    return end <= s1 || (s1 <= start && end <= e1) ||
           (e1 <= start && end <= s2) || (s2 <= start && end <= e2) ||
           e2 <= start;
  }
};

SwapGeometry geometry_of(const EntityMention& head, const EntityMention& tail) {
  SwapGeometry g;
  const EntityMention& first = head.start <= tail.start ? head : tail;
  const EntityMention& second = head.start <= tail.start ? tail : head;
  g.s1 = first.start;
  g.e1 = first.end;
  g.s2 = second.start;
  g.e2 = second.end;
  g.delta = (g.e2 - g.s2) - (g.e1 - g.s1);
  return g;
}

// Empty reason means eligible.
std::string ineligibility_reason(const std::vector<EntityMention>& entities,
                                 const std::vector<RelationMention>& relations,
                                 const SwapSpec& spec,
                                 std::size_t* relation_index) {
  long targets = 0;
  std::size_t target = 0;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (relations[r].rtype == spec.target_rtype) {
      ++targets;
      target = r;
    }
  }
  if (targets == 0) return "NO_TARGET";
  if (targets > 1) return "MULTIPLE_TARGET";

  const RelationMention& relation = relations[target];
  const EntityMention& head = entities[static_cast<std::size_t>(relation.head)];
  const EntityMention& tail = entities[static_cast<std::size_t>(relation.tail)];
  if (spec.require_same_etype && head.etype != tail.etype) {
    return "TYPE_MISMATCH";
  }
  if (head.start < tail.end && tail.start < head.end) {
    return "OVERLAPPING_ARGS";
  }
  const SwapGeometry g = geometry_of(head, tail);
  for (std::size_t e = 0; e < entities.size(); ++e) {
    if (e == static_cast<std::size_t>(relation.head) ||
        e == static_cast<std::size_t>(relation.tail)) {
      continue;
    }
    if (!g.fits_one_segment(entities[e].start, entities[e].end)) {
      return "STRADDLING_MENTION";
    }
  }
  if (relation_index) *relation_index = target;
  return "";
}

}  // namespace

EligibilityResult eligible_sentences(const AnnotatedCorpus& corpus,
                                     const SwapSpec& spec) {
  EligibilityResult result;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::size_t relation_index = 0;
    const std::string reason = ineligibility_reason(
        corpus.entities[i], corpus.relations[i], spec, &relation_index);
    if (reason.empty()) {
      result.eligible.push_back({i, relation_index});
    } else {
      result.skipped.push_back({corpus.sentences[i].sent_id, reason});
    }
  }
  return result;
}

SwappedSentence swap_arguments(const Sentence& sentence,
                               const std::vector<EntityMention>& entities,
                               const std::vector<RelationMention>& relations,
                               std::size_t relation_index,
                               const SwapSpec& spec) {
  std::size_t checked_index = 0;
  const std::string reason =
      ineligibility_reason(entities, relations, spec, &checked_index);
  if (!reason.empty() || checked_index != relation_index) {
    throw Error(ErrorCode::IneligibleSentence,
                "sentence '" + sentence.sent_id + "': " +
                    (reason.empty() ? "relation index is not the target"
                                    : reason));
  }

  const RelationMention& target = relations[relation_index];
  const EntityMention& head = entities[static_cast<std::size_t>(target.head)];
  const EntityMention& tail = entities[static_cast<std::size_t>(target.tail)];
  const SwapGeometry g = geometry_of(head, tail);

  SwappedSentence out;
  out.sentence.doc_id = sentence.doc_id;
  out.sentence.sent_id = sentence.sent_id;
  const auto& tokens = sentence.tokens;
  auto append = [&](int from, int to) {
    for (int t = from; t < to; ++t) {
      out.sentence.tokens.push_back(tokens[static_cast<std::size_t>(t)]);
    }
  };
  append(0, g.s1);
  append(g.s2, g.e2);
  append(g.e1, g.s2);
  append(g.s1, g.e1);
  append(g.e2, static_cast<int>(tokens.size()));

  out.entities = entities;
  out.remap.reserve(entities.size());
  for (EntityMention& mention : out.entities) {
    const int length = mention.end - mention.start;
    const int new_start = g.remap_pos(mention.start);
    out.remap.push_back(
        {mention.start, mention.end, new_start, new_start + length});
    mention.start = new_start;
    mention.end = new_start + length;
  }

  // Mention references survive the remap; the target relation exchanges its
  // head and tail so the swapped sentence expresses the reversed fact.
  out.relations = relations;
  std::swap(out.relations[relation_index].head,
            out.relations[relation_index].tail);
  return out;
}

SwapResult swap_corpus(const AnnotatedCorpus& corpus, const SwapSpec& spec) {
  SwapResult result;
  result.swapped.role = Role::Gold;

  const EligibilityResult eligibility = eligible_sentences(corpus, spec);
  result.skipped = eligibility.skipped;
  for (const EligibleTarget& target : eligibility.eligible) {
    SwappedSentence swapped = swap_arguments(
        corpus.sentences[target.sentence_index],
        corpus.entities[target.sentence_index],
        corpus.relations[target.sentence_index], target.relation_index, spec);
    result.swapped.add_sentence(std::move(swapped.sentence));
    result.swapped.entities.back() = std::move(swapped.entities);
    result.swapped.relations.back() = std::move(swapped.relations);
    result.span_remap.push_back(std::move(swapped.remap));
  }
  return result;
}

SwapEvaluation evaluate_swap(const AnnotatedCorpus& swapped_gold,
                             const AnnotatedCorpus& pred,
                             const std::string& target_rtype) {
  SwapEvaluation out;
  const ScoreReport ner = score_ner(swapped_gold, pred, Averaging::Micro);
  out.ner = ner.overall_prf;
  out.ner_counts = ner.overall;
  const ScoreReport re =
      score_re(swapped_gold, pred, RECriterion::Strict, Averaging::Micro,
               nullptr, nullptr, &target_rtype);
  out.re = re.overall_prf;
  out.re_counts = re.overall;
  out.revre =
      reverse_relation_score(swapped_gold, pred, target_rtype, &out.revre_counts);
  return out;
}

}  // namespace ieval
