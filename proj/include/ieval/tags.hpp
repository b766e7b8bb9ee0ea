#pragma once

#include <string>
#include <vector>

#include "ieval/corpus.hpp"

namespace ieval {

enum class TagScheme { IOB1, IOB2, IOBES };
enum class Strictness { Strict, Lenient };

TagScheme scheme_from_string(const std::string& name);  // throws UnsupportedFormat
const char* to_string(TagScheme scheme);

// One label per token: "O" or "P-TYPE" with P in the scheme's prefix set.
struct TagSequence {
  TagScheme scheme = TagScheme::IOBES;
  std::vector<std::string> labels;

  bool operator==(const TagSequence&) const = default;
};

// Decodes maximal chunks. Strict mode accepts only sequences that are the
// canonical encoding of their own span set; lenient mode applies the usual
// conlleval-style repair (a stray continuation opens a chunk, a type change
// closes the previous one). Returned mentions carry an empty sent_id.
std::vector<EntityMention> tags_to_spans(const TagSequence& tags,
                                         Strictness strictness);

// Inverse of tags_to_spans for non-overlapping, non-nested mentions.
// Throws Error(OverlappingSpans) otherwise.
TagSequence spans_to_tags(std::size_t token_count,
                          const std::vector<EntityMention>& mentions,
                          TagScheme scheme);

// Decode-then-re-encode; the entity set is unchanged.
TagSequence convert_scheme(const TagSequence& tags, TagScheme target,
                           Strictness strictness = Strictness::Lenient);

}  // namespace ieval
