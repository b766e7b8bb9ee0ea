#pragma once

#include <iosfwd>

#include "ieval/corpus.hpp"
#include "ieval/tags.hpp"

namespace ieval {

struct ConllOptions {
  int token_column = 0;
  int tag_column = 1;  // -1 selects the last column of each line
  TagScheme scheme = TagScheme::IOB2;
  Strictness strictness = Strictness::Lenient;
};

// One token per line, whitespace-separated columns, blank line between
// sentences, a line whose first column is "-DOCSTART-" between documents.
// Sentence ids are synthesized as "d{doc}#{i}" (i restarts per document).
AnnotatedCorpus parse_conll(std::istream& in, const ConllOptions& options);

// Two columns (token, tag) separated by a single space; a "-DOCSTART- O"
// line between documents, and before the first one when the source file
// had one. Relations are not representable and must be absent.
void write_conll(const AnnotatedCorpus& corpus, TagScheme scheme,
                 std::ostream& out);

}  // namespace ieval
