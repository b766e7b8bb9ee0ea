#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ieval/corpus.hpp"

namespace ieval {

// Canonical interchange format: a JSON array of
//   {"id": str, "tokens": [str], "entities": [{"type", "start", "end"}],
//    "relations": [{"type", "head", "tail"}]}
// with exclusive `end`; `head`/`tail` index the entities array.
AnnotatedCorpus parse_span_json(std::istream& in);
AnnotatedCorpus parse_span_json_file(const std::string& path);

// Per-sentence novelty labels parallel to the corpus annotation lists, as
// found in partition output files ("entity_novelty"/"relation_novelty").
struct NoveltyAnnotations {
  std::vector<std::vector<std::string>> entity_novelty;
  std::vector<std::vector<std::string>> relation_novelty;
};

// Reads a span-JSON file that may carry novelty arrays; absent arrays leave
// the optional empty.
AnnotatedCorpus parse_span_json(std::istream& in,
                                std::optional<NoveltyAnnotations>* novelty);

void write_span_json(const AnnotatedCorpus& corpus, std::ostream& out,
                     const NoveltyAnnotations* novelty = nullptr);
std::string to_span_json(const AnnotatedCorpus& corpus,
                         const NoveltyAnnotations* novelty = nullptr);

}  // namespace ieval
