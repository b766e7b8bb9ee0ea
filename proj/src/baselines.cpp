#include "ieval/baselines.hpp"

#include <algorithm>

#include "ieval/normalize.hpp"

namespace ieval {

namespace {

struct Candidate {
  int start = 0;
  int end = 0;
  std::string etype;
};

}  // namespace

AnnotatedCorpus retention_ner(const TrainIndex& index,
                              const AnnotatedCorpus& eval) {
  AnnotatedCorpus prediction;
  prediction.role = Role::Prediction;
  prediction.leading_docstart = eval.leading_docstart;

  for (std::size_t i = 0; i < eval.size(); ++i) {
    const Sentence& sentence = eval.sentences[i];
    const int n = static_cast<int>(sentence.tokens.size());
    const int max_len =
        std::min<int>(n, static_cast<int>(index.max_surface_tokens));

    std::vector<Candidate> candidates;
    for (int start = 0; start < n; ++start) {
      for (int len = 1; len <= max_len && start + len <= n; ++len) {
        const std::string surface = normalize_surface(
            std::span<const std::string>(sentence.tokens)
                .subspan(static_cast<std::size_t>(start),
                         static_cast<std::size_t>(len)),
            index.policy);
        auto etype = index.majority_etype(surface);
        if (etype) candidates.push_back({start, start + len, *etype});
      }
    }
    // Longest match first, then leftmost; remaining overlaps dropped.
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                const int la = a.end - a.start;
                const int lb = b.end - b.start;
                if (la != lb) return la > lb;
                return a.start < b.start;
              });
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    std::vector<EntityMention> accepted;
    for (const Candidate& candidate : candidates) {
      bool free = true;
      for (int t = candidate.start; t < candidate.end && free; ++t) {
        free = !covered[static_cast<std::size_t>(t)];
      }
      if (!free) continue;
      for (int t = candidate.start; t < candidate.end; ++t) {
        covered[static_cast<std::size_t>(t)] = true;
      }
      accepted.push_back(
          {sentence.sent_id, candidate.start, candidate.end, candidate.etype});
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const EntityMention& a, const EntityMention& b) {
                return std::tie(a.start, a.end) < std::tie(b.start, b.end);
              });

    prediction.add_sentence(sentence);
    prediction.entities.back() = std::move(accepted);
  }
  return prediction;
}

AnnotatedCorpus retention_re(const TrainIndex& index,
                             const AnnotatedCorpus& mention_predictions) {
  AnnotatedCorpus prediction = mention_predictions;
  prediction.role = Role::Prediction;

  for (std::size_t i = 0; i < prediction.size(); ++i) {
    const Sentence& sentence = prediction.sentences[i];
    const auto& entities = prediction.entities[i];
    std::vector<std::string> surfaces(entities.size());
    for (std::size_t e = 0; e < entities.size(); ++e) {
      surfaces[e] = normalize_surface(
          std::span<const std::string>(sentence.tokens)
              .subspan(entities[e].start, entities[e].end - entities[e].start),
          index.policy);
    }
    std::vector<RelationMention> relations;
    for (std::size_t head = 0; head < entities.size(); ++head) {
      for (std::size_t tail = 0; tail < entities.size(); ++tail) {
        if (head == tail) continue;
        auto rtype = index.majority_rtype(surfaces[head], surfaces[tail]);
        if (!rtype) continue;
        relations.push_back({sentence.sent_id, static_cast<int>(head),
                             static_cast<int>(tail), *rtype});
      }
    }
    prediction.relations[i] = std::move(relations);
  }
  return prediction;
}

}  // namespace ieval
