#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ieval/overlap.hpp"
#include "support.hpp"

using namespace ieval;
using test_support::load_fixture;

namespace {

EntityMention mention_in(const AnnotatedCorpus& corpus, std::size_t sentence,
                         std::size_t index) {
  return corpus.entities[sentence][index];
}

int novelty_rank(MentionNovelty novelty) {
  switch (novelty) {
    case MentionNovelty::New: return 0;
    case MentionNovelty::PartialMatch: return 1;
    case MentionNovelty::ExactMatch: return 2;
  }
  return -1;
}

int novelty_rank(RelationNovelty novelty) {
  switch (novelty) {
    case RelationNovelty::New: return 0;
    case RelationNovelty::PartialMatch: return 1;
    case RelationNovelty::ExactMatch: return 2;
  }
  return -1;
}

}  // namespace

TEST_CASE("train index contents match a manual scan of the fixture") {
  const AnnotatedCorpus train = load_fixture("train.json", Role::Train);
  const TrainIndex index = build_train_index(train);

  CHECK(index.typed_surfaces.at({"John Smith", "PER"}) == 2);
  CHECK(index.typed_surfaces.at({"Paris", "LOC"}) == 2);
  CHECK(index.typed_surfaces.at({"Smith", "PER"}) == 1);
  CHECK(index.typed_surfaces.at({"Acme Corp", "ORG"}) == 1);
  CHECK(index.typed_surfaces.size() == 4);

  CHECK(index.triples.at({"John Smith", "LiveIn", "Paris"}) == 1);
  CHECK(index.triples.at({"John Smith", "WorkFor", "Acme Corp"}) == 1);
  CHECK(index.triples.size() == 2);

  CHECK(index.head_args.count({"John Smith", "LiveIn"}) == 1);
  CHECK(index.head_args.count({"John Smith", "WorkFor"}) == 1);
  CHECK(index.tail_args.count({"Paris", "LiveIn"}) == 1);
  CHECK(index.tail_args.count({"Acme Corp", "WorkFor"}) == 1);

  CHECK(index.surface_count("Paris") == 2);
  CHECK(index.surface_count("Paris", "LOC") == 2);
  CHECK(index.surface_count("Berlin") == 0);
  CHECK(index.majority_etype("John Smith") == std::string("PER"));
  CHECK(index.majority_rtype("John Smith", "Paris") == std::string("LiveIn"));
  CHECK(index.max_surface_tokens == 2);

  // token_types holds non-stopword mention tokens only
  CHECK(index.token_types.at("Smith").count("PER") == 1);
  CHECK(index.token_types.count(".") == 0);
}

TEST_CASE("empty training corpus produces an empty index") {
  const TrainIndex index = build_train_index(AnnotatedCorpus{});
  CHECK(index.typed_surfaces.empty());
  CHECK(index.surfaces_any_type.empty());
  CHECK(index.token_types.empty());
  CHECK(index.triples.empty());
  CHECK(index.max_surface_tokens == 0);
}

TEST_CASE("mention classification on the fixtures") {
  const AnnotatedCorpus train = load_fixture("train.json", Role::Train);
  const AnnotatedCorpus eval = load_fixture("eval.json", Role::Gold);
  const TrainIndex index = build_train_index(train);

  // E1 "John Smith"/PER, "Berlin"/LOC; E2 "Mary Smith"/PER
  CHECK(classify_mention(index, eval.sentences[0], mention_in(eval, 0, 0)) ==
        MentionNovelty::ExactMatch);
  CHECK(classify_mention(index, eval.sentences[0], mention_in(eval, 0, 1)) ==
        MentionNovelty::New);
  CHECK(classify_mention(index, eval.sentences[1], mention_in(eval, 1, 0)) ==
        MentionNovelty::PartialMatch);
}

TEST_CASE("relation classification on the fixtures") {
  const TrainIndex index =
      build_train_index(load_fixture("train.json", Role::Train));
  CHECK(classify_relation(index, "John Smith", "LiveIn", "Berlin") ==
        RelationNovelty::PartialMatch);
  CHECK(classify_relation(index, "John Smith", "LiveIn", "Paris") ==
        RelationNovelty::ExactMatch);
  CHECK(classify_relation(index, "Berlin", "LiveIn", "Tokyo") ==
        RelationNovelty::New);
  // tail in the right position counts too
  CHECK(classify_relation(index, "Mary Smith", "WorkFor", "Acme Corp") ==
        RelationNovelty::PartialMatch);
}

TEST_CASE("an all-stopword mention that is not an exact match is new") {
  AnnotatedCorpus train;
  train.role = Role::Train;
  train.add_sentence({"", "t0", {"of", "the", "x"}});
  train.entities[0].push_back({"t0", 0, 2, "MISC"});
  const TrainIndex index = build_train_index(train);

  AnnotatedCorpus eval;
  eval.add_sentence({"", "e0", {"of", "the"}});
  eval.entities[0].push_back({"e0", 0, 2, "MISC"});
  eval.entities[0].push_back({"e0", 0, 1, "MISC"});
  // exact surface "of the" is indexed, so the full span matches exactly
  CHECK(classify_mention(index, eval.sentences[0], eval.entities[0][0]) ==
        MentionNovelty::ExactMatch);
  // "of" alone is a stopword-only surface never seen verbatim
  CHECK(classify_mention(index, eval.sentences[0], eval.entities[0][1]) ==
        MentionNovelty::New);
}

TEST_CASE("case and type sensitivity follow the policy") {
  AnnotatedCorpus train;
  train.role = Role::Train;
  train.add_sentence({"", "t0", {"PARIS", "calling"}});
  train.entities[0].push_back({"t0", 0, 1, "LOC"});
  AnnotatedCorpus eval;
  eval.add_sentence({"", "e0", {"paris", "again"}});
  eval.entities[0].push_back({"e0", 0, 1, "LOC"});
  eval.entities[0].push_back({"e0", 0, 1, "ORG"});

  const TrainIndex sensitive = build_train_index(train);
  CHECK(classify_mention(sensitive, eval.sentences[0], eval.entities[0][0]) ==
        MentionNovelty::New);

  NormalizationPolicy folded;
  folded.case_sensitive = false;
  const TrainIndex insensitive = build_train_index(train, folded);
  CHECK(classify_mention(insensitive, eval.sentences[0], eval.entities[0][0]) ==
        MentionNovelty::ExactMatch);
  CHECK(classify_mention(insensitive, eval.sentences[0], eval.entities[0][1]) ==
        MentionNovelty::New);

  NormalizationPolicy untyped = folded;
  untyped.type_sensitive = false;
  const TrainIndex any_type = build_train_index(train, untyped);
  CHECK(classify_mention(any_type, eval.sentences[0], eval.entities[0][1]) ==
        MentionNovelty::ExactMatch);
}

TEST_CASE("surface normalization options strip articles and possessives") {
  NormalizationPolicy policy;
  policy.strip_leading_article = true;
  policy.strip_trailing_possessive = true;
  const std::vector<std::string> tokens = {"The", "White", "House", "'s"};
  CHECK(normalize_surface(tokens, policy) == "White House");
  // stripping never empties a surface
  const std::vector<std::string> article = {"the"};
  CHECK(normalize_surface(article, policy) == "the");
}

TEST_CASE("fixture partition yields the documented class counts") {
  const AnnotatedCorpus train = load_fixture("train.json", Role::Train);
  const AnnotatedCorpus eval = load_fixture("eval.json", Role::Gold);
  const TrainIndex index = build_train_index(train);
  const PartitionResult partition = partition_corpus(index, eval);

  CHECK(partition.mention_counts.at(MentionNovelty::ExactMatch) == 3);
  CHECK(partition.mention_counts.at(MentionNovelty::PartialMatch) == 1);
  CHECK(partition.mention_counts.at(MentionNovelty::New) == 1);
  CHECK(partition.total_mentions() == 5);
  CHECK(partition.mention_proportion(MentionNovelty::ExactMatch) ==
        doctest::Approx(0.6));

  CHECK(partition.relation_counts.count(RelationNovelty::ExactMatch) == 0);
  CHECK(partition.relation_counts.at(RelationNovelty::PartialMatch) == 2);
  CHECK(partition.total_relations() == 2);

  // every item classified exactly once
  long covered = 0;
  for (const auto& row : partition.mention_novelty) {
    covered += static_cast<long>(row.size());
  }
  CHECK(covered == 5);
}

TEST_CASE("a corpus partitioned against itself is all exact match") {
  AnnotatedCorpus corpus = load_fixture("eval.json", Role::Train);
  const TrainIndex index = build_train_index(corpus);
  const PartitionResult partition = partition_corpus(index, corpus);
  CHECK(partition.mention_counts.at(MentionNovelty::ExactMatch) ==
        partition.total_mentions());
  CHECK(partition.relation_counts.at(RelationNovelty::ExactMatch) ==
        partition.total_relations());
}

TEST_CASE("empty evaluation corpus partitions to zero proportions") {
  const TrainIndex index =
      build_train_index(load_fixture("train.json", Role::Train));
  const PartitionResult partition = partition_corpus(index, AnnotatedCorpus{});
  CHECK(partition.total_mentions() == 0);
  CHECK(partition.mention_proportion(MentionNovelty::ExactMatch) == 0.0);
  CHECK(partition.relation_proportion(RelationNovelty::New) == 0.0);
}

TEST_CASE("classification agrees with the brute-force oracle") {
  std::mt19937 rng(101);
  const NormalizationPolicy policy;
  for (int round = 0; round < 8; ++round) {
    test_support::RandomCorpusOptions train_options;
    train_options.sentences = 60;
    train_options.id_prefix = "t";
    test_support::RandomCorpusOptions eval_options;
    eval_options.sentences = 25;
    eval_options.id_prefix = "e";
    AnnotatedCorpus train = test_support::random_corpus(rng, train_options);
    train.role = Role::Train;
    const AnnotatedCorpus eval = test_support::random_corpus(rng, eval_options);
    const TrainIndex index = build_train_index(train, policy);

    for (std::size_t i = 0; i < eval.size(); ++i) {
      for (const EntityMention& mention : eval.entities[i]) {
        CHECK(classify_mention(index, eval.sentences[i], mention) ==
              test_support::brute_force_mention_novelty(
                  train, eval.sentences[i], mention, policy));
      }
      for (const RelationMention& relation : eval.relations[i]) {
        CHECK(classify_relation(index, eval.sentences[i], eval.entities[i],
                                relation) ==
              test_support::brute_force_relation_novelty(
                  train, eval.sentences[i], eval.entities[i], relation,
                  policy));
      }
    }
  }
}

TEST_CASE("growing the training corpus never demotes a classification") {
  std::mt19937 rng(55);
  for (int round = 0; round < 10; ++round) {
    test_support::RandomCorpusOptions options;
    options.sentences = 30;
    options.id_prefix = "t";
    AnnotatedCorpus small = test_support::random_corpus(rng, options);
    small.role = Role::Train;

    AnnotatedCorpus grown = small;
    options.id_prefix = "x";
    options.sentences = 20;
    const AnnotatedCorpus extra = test_support::random_corpus(rng, options);
    for (std::size_t i = 0; i < extra.size(); ++i) {
      grown.add_sentence(extra.sentences[i]);
      grown.entities.back() = extra.entities[i];
      grown.relations.back() = extra.relations[i];
    }

    options.id_prefix = "e";
    options.sentences = 15;
    const AnnotatedCorpus eval = test_support::random_corpus(rng, options);

    const TrainIndex before = build_train_index(small);
    const TrainIndex after = build_train_index(grown);
    for (std::size_t i = 0; i < eval.size(); ++i) {
      for (const EntityMention& mention : eval.entities[i]) {
        CHECK(novelty_rank(classify_mention(after, eval.sentences[i], mention)) >=
              novelty_rank(classify_mention(before, eval.sentences[i], mention)));
      }
      for (const RelationMention& relation : eval.relations[i]) {
        CHECK(novelty_rank(classify_relation(after, eval.sentences[i],
                                             eval.entities[i], relation)) >=
              novelty_rank(classify_relation(before, eval.sentences[i],
                                             eval.entities[i], relation)));
      }
    }
  }
}
