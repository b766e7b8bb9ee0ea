#include "ieval/conll.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ieval/error.hpp"

namespace ieval {

namespace {

std::vector<std::string> split_columns(const std::string& line) {
  std::vector<std::string> columns;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) columns.push_back(line.substr(start, i - start));
  }
  return columns;
}

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

AnnotatedCorpus parse_conll(std::istream& in, const ConllOptions& options) {
  AnnotatedCorpus corpus;
  corpus.role = Role::Gold;

  int doc = 0;
  int sent_in_doc = 0;
  bool doc_has_sentences = false;
  bool any_content = false;
  long line_no = 0;

  std::vector<std::string> tokens;
  std::vector<std::string> labels;

  auto flush_sentence = [&]() {
    if (tokens.empty()) return;
    Sentence sentence;
    sentence.doc_id = "d" + std::to_string(doc);
    sentence.sent_id = sentence.doc_id + "#" + std::to_string(sent_in_doc);
    sentence.tokens = std::move(tokens);
    tokens.clear();

    TagSequence tags{options.scheme, std::move(labels)};
    labels.clear();
    std::vector<EntityMention> mentions =
        tags_to_spans(tags, options.strictness);
    for (EntityMention& mention : mentions) mention.sent_id = sentence.sent_id;

    corpus.add_sentence(std::move(sentence));
    corpus.entities.back() = std::move(mentions);
    ++sent_in_doc;
    doc_has_sentences = true;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) {
      flush_sentence();
      continue;
    }
    std::vector<std::string> columns = split_columns(line);
    if (!columns.empty() && columns[0] == "-DOCSTART-") {
      flush_sentence();
      if (doc_has_sentences) {
        ++doc;
        sent_in_doc = 0;
        doc_has_sentences = false;
      } else if (!any_content) {
        corpus.leading_docstart = true;
      }
      any_content = true;
      continue;
    }
    any_content = true;

    const int ncols = static_cast<int>(columns.size());
    const int tag_col =
        options.tag_column < 0 ? ncols - 1 : options.tag_column;
    if (options.token_column >= ncols || tag_col >= ncols || tag_col < 0) {
      std::ostringstream msg;
      msg << "line " << line_no << " has " << ncols << " columns, need token"
          << " column " << options.token_column << " and tag column "
          << (options.tag_column < 0 ? std::string("last")
                                     : std::to_string(options.tag_column));
      throw Error(ErrorCode::MalformedLine, msg.str());
    }
    tokens.push_back(columns[static_cast<std::size_t>(options.token_column)]);
    labels.push_back(columns[static_cast<std::size_t>(tag_col)]);
  }
  flush_sentence();

  if (corpus.sentences.empty()) {
    throw Error(ErrorCode::EmptyInput, "no sentences in CoNLL input");
  }
  return corpus;
}

void write_conll(const AnnotatedCorpus& corpus, TagScheme scheme,
                 std::ostream& out) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus.relations[i].empty()) {
      throw Error(ErrorCode::UnsupportedFormat,
                  "relations cannot be represented in CoNLL output (sentence " +
                      corpus.sentences[i].sent_id + ")");
    }
  }
  const std::string* prev_doc = nullptr;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Sentence& sentence = corpus.sentences[i];
    const bool doc_changed = prev_doc && *prev_doc != sentence.doc_id;
    if (doc_changed || (!prev_doc && corpus.leading_docstart)) {
      out << "-DOCSTART- O\n\n";
    }
    prev_doc = &sentence.doc_id;

    TagSequence tags =
        spans_to_tags(sentence.tokens.size(), corpus.entities[i], scheme);
    for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
      out << sentence.tokens[t] << ' ' << tags.labels[t] << '\n';
    }
    out << '\n';
  }
}

}  // namespace ieval
