#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ieval {

enum class Role { Train, Gold, Prediction };

struct Sentence {
  std::string doc_id;
  std::string sent_id;  // unique within its corpus
  std::vector<std::string> tokens;
};

// Token span [start, end) over the referenced sentence, with an entity type.
struct EntityMention {
  std::string sent_id;
  int start = 0;
  int end = 0;
  std::string etype;

  friend auto operator<=>(const EntityMention&, const EntityMention&) = default;
};

// Directed typed relation; head/tail index the sentence's entity list.
// head is the subject, tail the object.
struct RelationMention {
  std::string sent_id;
  int head = 0;
  int tail = 0;
  std::string rtype;

  friend auto operator<=>(const RelationMention&,
                          const RelationMention&) = default;
};

struct AnnotatedCorpus {
  std::vector<Sentence> sentences;
  std::vector<std::vector<EntityMention>> entities;    // parallel to sentences
  std::vector<std::vector<RelationMention>> relations;  // parallel to sentences
  Role role = Role::Gold;
  // Whether a CoNLL source file opened with a -DOCSTART- marker. Used to
  // reproduce the original layout when re-serializing.
  bool leading_docstart = false;

  std::size_t size() const { return sentences.size(); }

  void add_sentence(Sentence s) {
    sentences.push_back(std::move(s));
    entities.emplace_back();
    relations.emplace_back();
  }
};

// Raw surface form: tokens[start..end) joined by a single space.
std::string surface_of(std::span<const std::string> tokens, int start, int end);
std::string surface_of(const Sentence& sentence, const EntityMention& mention);

// sent_id -> position lookup. Throws Error(DuplicateSentId) on duplicates.
std::map<std::string, std::size_t> sentence_index(const AnnotatedCorpus& corpus);

struct Violation {
  std::string sent_id;
  std::string code;
  std::string message;
  bool warning = false;  // warnings do not fail validation
};

// Structural audit. Nested/overlapping entities are warnings (span-based
// formats permit them); everything else is an error.
std::vector<Violation> validate_corpus(const AnnotatedCorpus& corpus);

}  // namespace ieval
