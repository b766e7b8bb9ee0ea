#pragma once

// Shared test utilities: fixture loading, random corpus generation, and the
// brute-force oracles the expected values are computed from. The oracles
// deliberately re-derive every answer by scanning the raw corpora; they must
// stay independent of the index/score implementations they check.

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ieval/corpus.hpp"
#include "ieval/normalize.hpp"
#include "ieval/overlap.hpp"
#include "ieval/span_json.hpp"

namespace test_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(IEVAL_FIXTURE_DIR) + "/" + name;
}

inline ieval::AnnotatedCorpus load_fixture(const std::string& name,
                                           ieval::Role role) {
  ieval::AnnotatedCorpus corpus =
      ieval::parse_span_json_file(fixture_path(name));
  corpus.role = role;
  return corpus;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string mention_surface(const ieval::Sentence& sentence,
                                   const ieval::EntityMention& mention,
                                   const ieval::NormalizationPolicy& policy) {
  return ieval::normalize_surface(
      std::span<const std::string>(sentence.tokens)
          .subspan(static_cast<std::size_t>(mention.start),
                   static_cast<std::size_t>(mention.end - mention.start)),
      policy);
}

// ---------------------------------------------------------------------------
// Brute-force novelty oracles: full scan of the training corpus per query.

inline ieval::MentionNovelty brute_force_mention_novelty(
    const ieval::AnnotatedCorpus& train, const ieval::Sentence& sentence,
    const ieval::EntityMention& mention,
    const ieval::NormalizationPolicy& policy) {
  using ieval::MentionNovelty;
  const std::string surface = mention_surface(sentence, mention, policy);

  for (std::size_t i = 0; i < train.size(); ++i) {
    for (const ieval::EntityMention& candidate : train.entities[i]) {
      if (policy.type_sensitive && candidate.etype != mention.etype) continue;
      if (mention_surface(train.sentences[i], candidate, policy) == surface) {
        return MentionNovelty::ExactMatch;
      }
    }
  }

  for (int t = mention.start; t < mention.end; ++t) {
    const std::string& raw = sentence.tokens[static_cast<std::size_t>(t)];
    if (ieval::is_stopword(raw, policy)) continue;
    const std::string token = ieval::normalize_token(raw, policy);
    for (std::size_t i = 0; i < train.size(); ++i) {
      for (const ieval::EntityMention& candidate : train.entities[i]) {
        if (policy.type_sensitive && candidate.etype != mention.etype) continue;
        for (int u = candidate.start; u < candidate.end; ++u) {
          const std::string& train_raw =
              train.sentences[i].tokens[static_cast<std::size_t>(u)];
          if (ieval::normalize_token(train_raw, policy) == token) {
            return MentionNovelty::PartialMatch;
          }
        }
      }
    }
  }
  return MentionNovelty::New;
}

inline ieval::RelationNovelty brute_force_relation_novelty(
    const ieval::AnnotatedCorpus& train, const ieval::Sentence& sentence,
    const std::vector<ieval::EntityMention>& entities,
    const ieval::RelationMention& relation,
    const ieval::NormalizationPolicy& policy) {
  using ieval::RelationNovelty;
  const std::string head = mention_surface(
      sentence, entities[static_cast<std::size_t>(relation.head)], policy);
  const std::string tail = mention_surface(
      sentence, entities[static_cast<std::size_t>(relation.tail)], policy);

  bool head_seen = false;
  bool tail_seen = false;
  for (std::size_t i = 0; i < train.size(); ++i) {
    for (const ieval::RelationMention& candidate : train.relations[i]) {
      if (candidate.rtype != relation.rtype) continue;
      const std::string candidate_head = mention_surface(
          train.sentences[i],
          train.entities[i][static_cast<std::size_t>(candidate.head)], policy);
      const std::string candidate_tail = mention_surface(
          train.sentences[i],
          train.entities[i][static_cast<std::size_t>(candidate.tail)], policy);
      if (candidate_head == head && candidate_tail == tail) {
        return RelationNovelty::ExactMatch;
      }
      head_seen = head_seen || candidate_head == head;
      tail_seen = tail_seen || candidate_tail == tail;
    }
  }
  return head_seen || tail_seen ? RelationNovelty::PartialMatch
                                : RelationNovelty::New;
}

// ---------------------------------------------------------------------------
// Random corpora. Entities are non-overlapping spans; the token pool is kept
// small so surfaces recur between corpora.

struct RandomCorpusOptions {
  int sentences = 20;
  int vocab = 40;
  int min_tokens = 3;
  int max_tokens = 12;
  int entity_types = 3;
  int relation_types = 2;
  double entity_rate = 0.5;    // expected entities per 3 tokens
  double relation_rate = 0.6;  // chance to relate a pair of entities
  std::string id_prefix = "r";
};

inline ieval::AnnotatedCorpus random_corpus(std::mt19937& rng,
                                            const RandomCorpusOptions& options) {
  ieval::AnnotatedCorpus corpus;
  std::uniform_int_distribution<int> token_count(options.min_tokens,
                                                 options.max_tokens);
  std::uniform_int_distribution<int> word(0, options.vocab - 1);
  std::uniform_int_distribution<int> etype(0, options.entity_types - 1);
  std::uniform_int_distribution<int> rtype(0, options.relation_types - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  for (int s = 0; s < options.sentences; ++s) {
    ieval::Sentence sentence;
    sentence.sent_id = options.id_prefix + std::to_string(s);
    const int n = token_count(rng);
    for (int t = 0; t < n; ++t) {
      sentence.tokens.push_back("w" + std::to_string(word(rng)));
    }

    std::vector<ieval::EntityMention> entities;
    int cursor = 0;
    while (cursor < n) {
      if (coin(rng) < options.entity_rate) {
        std::uniform_int_distribution<int> span_len(1, 3);
        const int len = std::min(span_len(rng), n - cursor);
        entities.push_back({sentence.sent_id, cursor, cursor + len,
                            "T" + std::to_string(etype(rng))});
        cursor += len;
      }
      ++cursor;
    }

    std::vector<ieval::RelationMention> relations;
    for (std::size_t a = 0; a < entities.size(); ++a) {
      for (std::size_t b = 0; b < entities.size(); ++b) {
        if (a == b || coin(rng) >= options.relation_rate) continue;
        relations.push_back({sentence.sent_id, static_cast<int>(a),
                             static_cast<int>(b),
                             "R" + std::to_string(rtype(rng))});
      }
    }

    corpus.add_sentence(std::move(sentence));
    corpus.entities.back() = std::move(entities);
    corpus.relations.back() = std::move(relations);
  }
  return corpus;
}

// Sentences built to be swap-eligible: two same-type arguments, one target
// relation, extra mentions confined to whole segments.
inline ieval::AnnotatedCorpus random_eligible_corpus(
    std::mt19937& rng, int sentences, const std::string& rtype = "Kill") {
  std::uniform_int_distribution<int> pad(0, 3);
  std::uniform_int_distribution<int> arg_len(1, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  ieval::AnnotatedCorpus corpus;
  int word = 0;
  for (int s = 0; s < sentences; ++s) {
    const std::string id = "s" + std::to_string(s);
    std::vector<std::string> tokens;
    auto fill = [&](int count) {
      for (int i = 0; i < count; ++i) {
        tokens.push_back("w" + std::to_string(word++ % 50));
      }
    };
    std::vector<ieval::EntityMention> entities;
    std::vector<ieval::RelationMention> relations;

    const int lead = pad(rng);
    fill(lead);
    if (lead >= 2 && coin(rng) < 0.5) {
      entities.push_back({id, 0, 1, "MISC"});
    }
    const int head_len = arg_len(rng);
    const int head_start = static_cast<int>(tokens.size());
    fill(head_len);
    const int head_index = static_cast<int>(entities.size());
    entities.push_back({id, head_start, head_start + head_len, "PER"});

    const int mid = 1 + pad(rng);
    const int mid_start = static_cast<int>(tokens.size());
    fill(mid);
    if (mid >= 2 && coin(rng) < 0.5) {
      entities.push_back({id, mid_start, mid_start + 1, "MISC"});
    }

    const int tail_len = arg_len(rng);
    const int tail_start = static_cast<int>(tokens.size());
    fill(tail_len);
    const int tail_index = static_cast<int>(entities.size());
    entities.push_back({id, tail_start, tail_start + tail_len, "PER"});
    fill(pad(rng));

    relations.push_back({id, head_index, tail_index, rtype});
    if (coin(rng) < 0.4) {
      relations.push_back({id, tail_index, head_index, "Knows"});
    }

    corpus.add_sentence({"", id, std::move(tokens)});
    corpus.entities.back() = std::move(entities);
    corpus.relations.back() = std::move(relations);
  }
  return corpus;
}

}  // namespace test_support
