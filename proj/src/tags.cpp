#include "ieval/tags.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ieval/error.hpp"

namespace ieval {

TagScheme scheme_from_string(const std::string& name) {
  if (name == "iob1" || name == "IOB1") return TagScheme::IOB1;
  if (name == "iob2" || name == "IOB2" || name == "iob" || name == "IOB")
    return TagScheme::IOB2;
  if (name == "iobes" || name == "IOBES") return TagScheme::IOBES;
  throw Error(ErrorCode::UnsupportedFormat, "unknown tagging scheme '" + name + "'");
}

const char* to_string(TagScheme scheme) {
  switch (scheme) {
    case TagScheme::IOB1: return "iob1";
    case TagScheme::IOB2: return "iob2";
    case TagScheme::IOBES: return "iobes";
  }
  return "?";
}

namespace {

struct ParsedTag {
  char prefix = 'O';  // one of O B I E S
  std::string type;
};

// Lenient parsing accepts any of the five prefixes regardless of scheme and
// treats everything unparseable as outside.
std::optional<ParsedTag> parse_label(const std::string& label) {
  if (label == "O") return ParsedTag{};
  if (label.size() >= 3 && label[1] == '-') {
    const char p = label[0];
    if (p == 'B' || p == 'I' || p == 'E' || p == 'S') {
      return ParsedTag{p, label.substr(2)};
    }
  }
  return std::nullopt;
}

bool prefix_in_scheme(char prefix, TagScheme scheme) {
  if (prefix == 'O') return true;
  switch (scheme) {
    case TagScheme::IOB1:
    case TagScheme::IOB2:
      return prefix == 'B' || prefix == 'I';
    case TagScheme::IOBES:
      return true;  // B I E S
  }
  return false;
}

bool chunk_ends_before(const ParsedTag& prev, const ParsedTag& cur) {
  if (prev.prefix == 'E' || prev.prefix == 'S') return true;
  if (prev.prefix == 'B' || prev.prefix == 'I') {
    if (cur.prefix == 'B' || cur.prefix == 'S' || cur.prefix == 'O')
      return true;
    return prev.type != cur.type;  // I/E of a different type
  }
  return false;  // prev is O
}

bool chunk_starts_here(const ParsedTag& prev, const ParsedTag& cur) {
  if (cur.prefix == 'B' || cur.prefix == 'S') return true;
  if (cur.prefix == 'I' || cur.prefix == 'E') {
    if (prev.prefix == 'O' || prev.prefix == 'E' || prev.prefix == 'S')
      return true;  // stray continuation opens a chunk
    return prev.type != cur.type;
  }
  return false;  // cur is O
}

std::vector<EntityMention> decode_lenient(const std::vector<ParsedTag>& tags) {
  std::vector<EntityMention> spans;
  int open_start = -1;
  std::string open_type;
  auto close = [&](int end) {
    spans.push_back({"", open_start, end, open_type});
    open_start = -1;
  };

  ParsedTag prev;  // outside before the sentence
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const ParsedTag& cur = tags[i];
    if (open_start >= 0 && chunk_ends_before(prev, cur)) {
      close(static_cast<int>(i));
    }
    if (chunk_starts_here(prev, cur)) {
      open_start = static_cast<int>(i);
      open_type = cur.type;
    }
    if (open_start >= 0 && (cur.prefix == 'E' || cur.prefix == 'S')) {
      close(static_cast<int>(i) + 1);
    }
    prev = cur;
  }
  if (open_start >= 0) close(static_cast<int>(tags.size()));
  return spans;
}

}  // namespace

std::vector<EntityMention> tags_to_spans(const TagSequence& tags,
                                         Strictness strictness) {
  std::vector<ParsedTag> parsed(tags.labels.size());
  for (std::size_t i = 0; i < tags.labels.size(); ++i) {
    auto tag = parse_label(tags.labels[i]);
    if (!tag) {
      if (strictness == Strictness::Strict) {
        throw Error(ErrorCode::UnknownTagPrefix,
                    "cannot parse tag '" + tags.labels[i] + "' at position " +
                        std::to_string(i));
      }
      tag = ParsedTag{};  // repaired to outside
    }
    if (strictness == Strictness::Strict &&
        !prefix_in_scheme(tag->prefix, tags.scheme)) {
      throw Error(ErrorCode::IllFormedSequence,
                  std::string("prefix '") + tag->prefix + "' not in scheme " +
                      to_string(tags.scheme));
    }
    parsed[i] = std::move(*tag);
  }

  std::vector<EntityMention> spans = decode_lenient(parsed);

  if (strictness == Strictness::Strict) {
    // Well-formed means the sequence is the canonical encoding of its own
    // chunk set.
    TagSequence canonical =
        spans_to_tags(tags.labels.size(), spans, tags.scheme);
    for (std::size_t i = 0; i < tags.labels.size(); ++i) {
      if (canonical.labels[i] != tags.labels[i]) {
        throw Error(ErrorCode::IllFormedSequence,
                    "tag '" + tags.labels[i] + "' at position " +
                        std::to_string(i) + " (expected '" +
                        canonical.labels[i] + "')");
      }
    }
  }
  return spans;
}

TagSequence spans_to_tags(std::size_t token_count,
                          const std::vector<EntityMention>& mentions,
                          TagScheme scheme) {
  std::vector<EntityMention> sorted = mentions;
  std::sort(sorted.begin(), sorted.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return std::tie(a.start, a.end) < std::tie(b.start, b.end);
            });
  const int n = static_cast<int>(token_count);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const EntityMention& m = sorted[i];
    if (m.start < 0 || m.start >= m.end || m.end > n) {
      std::ostringstream msg;
      msg << "span (" << m.start << ", " << m.end << ") outside sentence of "
          << n << " tokens";
      throw Error(ErrorCode::IndexOutOfRange, msg.str());
    }
    if (i > 0 && sorted[i - 1].end > m.start) {
      throw Error(ErrorCode::OverlappingSpans,
                  "mentions (" + std::to_string(sorted[i - 1].start) + ", " +
                      std::to_string(sorted[i - 1].end) + ") and (" +
                      std::to_string(m.start) + ", " + std::to_string(m.end) +
                      ") cannot be tag-encoded");
    }
  }

  TagSequence out;
  out.scheme = scheme;
  out.labels.assign(token_count, "O");
  const EntityMention* prev = nullptr;
  for (const EntityMention& m : sorted) {
    const bool single = m.end - m.start == 1;
    for (int t = m.start; t < m.end; ++t) {
      std::string prefix;
      switch (scheme) {
        case TagScheme::IOB1:
          // Chunk-initial I, except B right after a same-type chunk.
          if (t == m.start && prev && prev->end == m.start &&
              prev->etype == m.etype) {
            prefix = "B";
          } else {
            prefix = "I";
          }
          break;
        case TagScheme::IOB2:
          prefix = (t == m.start) ? "B" : "I";
          break;
        case TagScheme::IOBES:
          if (single) {
            prefix = "S";
          } else if (t == m.start) {
            prefix = "B";
          } else if (t == m.end - 1) {
            prefix = "E";
          } else {
            prefix = "I";
          }
          break;
      }
      out.labels[static_cast<std::size_t>(t)] = prefix + "-" + m.etype;
    }
    prev = &m;
  }
  return out;
}

TagSequence convert_scheme(const TagSequence& tags, TagScheme target,
                           Strictness strictness) {
  return spans_to_tags(tags.labels.size(), tags_to_spans(tags, strictness),
                       target);
}

}  // namespace ieval
