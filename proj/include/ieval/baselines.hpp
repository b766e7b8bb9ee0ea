#pragma once

#include "ieval/corpus.hpp"
#include "ieval/overlap.hpp"

namespace ieval {

// Memorization baseline: every maximal occurrence of a training mention
// surface is predicted with its majority training type. Overlapping
// candidates resolve longest-match first, then leftmost; type ties break
// lexicographically.
AnnotatedCorpus retention_ner(const TrainIndex& index,
                              const AnnotatedCorpus& eval);

// Adds relation predictions: each ordered pair of predicted mentions whose
// surfaces form a training relation pair gets that pair's majority relation
// type. At most one relation per ordered pair. Mention pairing ignores the
// predicted entity types; the lookup is purely surface-based.
AnnotatedCorpus retention_re(const TrainIndex& index,
                             const AnnotatedCorpus& mention_predictions);

}  // namespace ieval
