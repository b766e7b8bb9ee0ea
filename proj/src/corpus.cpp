#include "ieval/corpus.hpp"

#include <set>
#include <sstream>

#include "ieval/error.hpp"

namespace ieval {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::UnknownTagPrefix: return "UnknownTagPrefix";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateSentId: return "DuplicateSentId";
    case ErrorCode::IllFormedSequence: return "IllFormedSequence";
    case ErrorCode::OverlappingSpans: return "OverlappingSpans";
    case ErrorCode::SentenceMismatch: return "SentenceMismatch";
    case ErrorCode::UnknownCriterion: return "UnknownCriterion";
    case ErrorCode::IneligibleSentence: return "IneligibleSentence";
    case ErrorCode::EmptyEvalCorpus: return "EmptyEvalCorpus";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

std::string surface_of(std::span<const std::string> tokens, int start,
                       int end) {
  std::string out;
  for (int i = start; i < end; ++i) {
    if (i > start) out += ' ';
    out += tokens[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string surface_of(const Sentence& sentence, const EntityMention& mention) {
  return surface_of(sentence.tokens, mention.start, mention.end);
}

std::map<std::string, std::size_t> sentence_index(
    const AnnotatedCorpus& corpus) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    auto [it, inserted] = index.emplace(corpus.sentences[i].sent_id, i);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateSentId, corpus.sentences[i].sent_id);
    }
  }
  return index;
}

namespace {

bool spans_nested_or_overlapping(const EntityMention& a,
                                 const EntityMention& b) {
  return a.start < b.end && b.start < a.end;
}

}  // namespace

std::vector<Violation> validate_corpus(const AnnotatedCorpus& corpus) {
  std::vector<Violation> out;
  auto report = [&out](const std::string& sent_id, const char* code,
                       std::string message, bool warning = false) {
    out.push_back({sent_id, code, std::move(message), warning});
  };

  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Sentence& sentence = corpus.sentences[i];
    if (!seen_ids.insert(sentence.sent_id).second) {
      report(sentence.sent_id, "DUP_SENT_ID", "duplicate sentence id");
    }
    const int n = static_cast<int>(sentence.tokens.size());
    if (n == 0) {
      report(sentence.sent_id, "EMPTY_SENTENCE", "sentence has no tokens");
    }
    for (const std::string& token : sentence.tokens) {
      if (token.empty()) {
        report(sentence.sent_id, "EMPTY_TOKEN", "empty token string");
        break;
      }
    }

    const auto& entities = corpus.entities[i];
    std::set<std::tuple<int, int, std::string>> keys;
    for (const EntityMention& mention : entities) {
      if (!mention.sent_id.empty() && mention.sent_id != sentence.sent_id) {
        report(sentence.sent_id, "SENT_ID_MISMATCH",
               "mention sent_id '" + mention.sent_id + "' does not resolve");
      }
      if (mention.start < 0 || mention.start >= mention.end ||
          mention.end > n) {
        std::ostringstream msg;
        msg << "span (" << mention.start << ", " << mention.end
            << ") outside sentence of " << n << " tokens";
        report(sentence.sent_id, "SPAN_RANGE", msg.str());
        continue;
      }
      if (!keys.emplace(mention.start, mention.end, mention.etype).second) {
        report(sentence.sent_id, "DUP_ENTITY",
               "duplicate mention '" + surface_of(sentence, mention) + "'/" +
                   mention.etype);
      }
    }
    for (std::size_t a = 0; a + 1 < entities.size(); ++a) {
      bool flagged = false;
      for (std::size_t b = a + 1; b < entities.size() && !flagged; ++b) {
        // exact duplicates are reported as DUP_ENTITY above
        if (entities[a].start == entities[b].start &&
            entities[a].end == entities[b].end &&
            entities[a].etype == entities[b].etype) {
          continue;
        }
        if (spans_nested_or_overlapping(entities[a], entities[b])) {
          report(sentence.sent_id, "NESTED_SPANS",
                 "mentions share tokens (nested or overlapping spans)",
                 /*warning=*/true);
          flagged = true;
        }
      }
      if (flagged) break;  // one warning per sentence is enough
    }

    const int entity_count = static_cast<int>(entities.size());
    for (const RelationMention& relation : corpus.relations[i]) {
      if (!relation.sent_id.empty() && relation.sent_id != sentence.sent_id) {
        report(sentence.sent_id, "SENT_ID_MISMATCH",
               "relation sent_id '" + relation.sent_id + "' does not resolve");
      }
      if (relation.head < 0 || relation.head >= entity_count ||
          relation.tail < 0 || relation.tail >= entity_count) {
        report(sentence.sent_id, "REL_INDEX",
               "relation argument index outside the entity list");
        continue;
      }
      if (relation.head == relation.tail) {
        report(sentence.sent_id, "REL_SELF",
               "relation head and tail reference the same mention");
      }
    }
  }
  return out;
}

}  // namespace ieval
