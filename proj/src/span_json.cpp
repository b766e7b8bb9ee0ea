#include "ieval/span_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ieval/error.hpp"

namespace ieval {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json* find_field(const json& object, const char* name) {
  auto it = object.find(name);
  return it == object.end() ? nullptr : &*it;
}

long require_int(const json& object, const char* name,
                 const std::string& where) {
  const json* field = find_field(object, name);
  if (!field || !field->is_number_integer()) {
    throw Error(ErrorCode::SchemaViolation,
                where + ": missing or non-integer field '" + name + "'");
  }
  return field->get<long>();
}

std::string require_string(const json& object, const char* name,
                           const std::string& where) {
  const json* field = find_field(object, name);
  if (!field || !field->is_string()) {
    throw Error(ErrorCode::SchemaViolation,
                where + ": missing or non-string field '" + name + "'");
  }
  return field->get<std::string>();
}

std::vector<std::string> read_novelty_array(const json& object,
                                            const char* name,
                                            std::size_t expected,
                                            const std::string& where) {
  const json* field = find_field(object, name);
  if (!field) return {};
  if (!field->is_array() || field->size() != expected) {
    throw Error(ErrorCode::SchemaViolation,
                where + ": '" + name + "' must be an array of " +
                    std::to_string(expected) + " strings");
  }
  std::vector<std::string> out;
  for (const json& item : *field) {
    if (!item.is_string()) {
      throw Error(ErrorCode::SchemaViolation,
                  where + ": '" + name + "' entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

AnnotatedCorpus parse_span_json(std::istream& in,
                                std::optional<NoveltyAnnotations>* novelty) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaViolation,
                std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_array()) {
    throw Error(ErrorCode::SchemaViolation,
                "top-level value must be an array of sentences");
  }

  AnnotatedCorpus corpus;
  corpus.role = Role::Gold;
  NoveltyAnnotations annotations;
  bool any_novelty = false;
  std::map<std::string, std::size_t> seen_ids;

  for (const json& item : root) {
    if (!item.is_object()) {
      throw Error(ErrorCode::SchemaViolation, "sentence entries must be objects");
    }
    Sentence sentence;
    sentence.sent_id = require_string(item, "id", "sentence");
    const std::string where = "sentence '" + sentence.sent_id + "'";
    if (!seen_ids.emplace(sentence.sent_id, corpus.size()).second) {
      throw Error(ErrorCode::DuplicateSentId, sentence.sent_id);
    }

    const json* tokens = find_field(item, "tokens");
    if (!tokens || !tokens->is_array() || tokens->empty()) {
      throw Error(ErrorCode::SchemaViolation,
                  where + ": 'tokens' must be a non-empty array");
    }
    for (const json& token : *tokens) {
      if (!token.is_string() || token.get<std::string>().empty()) {
        throw Error(ErrorCode::SchemaViolation,
                    where + ": tokens must be non-empty strings");
      }
      sentence.tokens.push_back(token.get<std::string>());
    }
    const long token_count = static_cast<long>(sentence.tokens.size());

    std::vector<EntityMention> entities;
    if (const json* list = find_field(item, "entities")) {
      if (!list->is_array()) {
        throw Error(ErrorCode::SchemaViolation, where + ": 'entities' must be an array");
      }
      for (const json& entry : *list) {
        EntityMention mention;
        mention.sent_id = sentence.sent_id;
        mention.etype = require_string(entry, "type", where);
        mention.start = static_cast<int>(require_int(entry, "start", where));
        mention.end = static_cast<int>(require_int(entry, "end", where));
        if (mention.start < 0 || mention.start >= mention.end ||
            mention.end > token_count) {
          std::ostringstream msg;
          msg << where << ": span (" << mention.start << ", " << mention.end
              << ") outside sentence of " << token_count << " tokens";
          throw Error(ErrorCode::IndexOutOfRange, msg.str());
        }
        entities.push_back(std::move(mention));
      }
    }

    std::vector<RelationMention> relations;
    if (const json* list = find_field(item, "relations")) {
      if (!list->is_array()) {
        throw Error(ErrorCode::SchemaViolation, where + ": 'relations' must be an array");
      }
      const long entity_count = static_cast<long>(entities.size());
      for (const json& entry : *list) {
        RelationMention relation;
        relation.sent_id = sentence.sent_id;
        relation.rtype = require_string(entry, "type", where);
        relation.head = static_cast<int>(require_int(entry, "head", where));
        relation.tail = static_cast<int>(require_int(entry, "tail", where));
        if (relation.head < 0 || relation.head >= entity_count ||
            relation.tail < 0 || relation.tail >= entity_count) {
          std::ostringstream msg;
          msg << where << ": relation argument index out of range (head "
              << relation.head << ", tail " << relation.tail << ", "
              << entity_count << " entities)";
          throw Error(ErrorCode::IndexOutOfRange, msg.str());
        }
        if (relation.head == relation.tail) {
          throw Error(ErrorCode::SchemaViolation,
                      where + ": relation head and tail must differ");
        }
        relations.push_back(std::move(relation));
      }
    }

    annotations.entity_novelty.push_back(
        read_novelty_array(item, "entity_novelty", entities.size(), where));
    annotations.relation_novelty.push_back(
        read_novelty_array(item, "relation_novelty", relations.size(), where));
    if (find_field(item, "entity_novelty") ||
        find_field(item, "relation_novelty")) {
      any_novelty = true;
    }

    corpus.add_sentence(std::move(sentence));
    corpus.entities.back() = std::move(entities);
    corpus.relations.back() = std::move(relations);
  }

  if (novelty) {
    if (any_novelty) {
      *novelty = std::move(annotations);
    } else {
      novelty->reset();
    }
  }
  return corpus;
}

AnnotatedCorpus parse_span_json(std::istream& in) {
  return parse_span_json(in, nullptr);
}

AnnotatedCorpus parse_span_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  return parse_span_json(in);
}

void write_span_json(const AnnotatedCorpus& corpus, std::ostream& out,
                     const NoveltyAnnotations* novelty) {
  ordered_json root = ordered_json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Sentence& sentence = corpus.sentences[i];
    ordered_json entry;
    entry["id"] = sentence.sent_id;
    entry["tokens"] = sentence.tokens;
    ordered_json entities = ordered_json::array();
    for (const EntityMention& mention : corpus.entities[i]) {
      entities.push_back({{"type", mention.etype},
                          {"start", mention.start},
                          {"end", mention.end}});
    }
    entry["entities"] = std::move(entities);
    ordered_json relations = ordered_json::array();
    for (const RelationMention& relation : corpus.relations[i]) {
      relations.push_back({{"type", relation.rtype},
                           {"head", relation.head},
                           {"tail", relation.tail}});
    }
    entry["relations"] = std::move(relations);
    if (novelty) {
      entry["entity_novelty"] = novelty->entity_novelty[i];
      entry["relation_novelty"] = novelty->relation_novelty[i];
    }
    root.push_back(std::move(entry));
  }
  out << root.dump(2) << '\n';
}

std::string to_span_json(const AnnotatedCorpus& corpus,
                         const NoveltyAnnotations* novelty) {
  std::ostringstream out;
  write_span_json(corpus, out, novelty);
  return out.str();
}

}  // namespace ieval
