#include "ieval/normalize.hpp"

#include <cctype>
#include <fstream>
#include <vector>

#include "ieval/error.hpp"

namespace ieval {

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      "a",  "an",   "the", "of",   "in",   "on", "at", "to",  "for",
      "and", "or",  "by",  "with", "from", "as", "is", "was", "be",
      "this", "that", "'s", ".",   ",",    "-",  "&"};
  return words;
}

const std::set<std::string>& NormalizationPolicy::effective_stopwords() const {
  return stopwords.empty() ? default_stopwords() : stopwords;
}

std::set<std::string> load_stopword_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open stopword file '" + path + "'");
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    words.insert(lowercase_ascii(line));
  }
  return words;
}

std::string lowercase_ascii(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

bool is_stopword(const std::string& token, const NormalizationPolicy& policy) {
  return policy.effective_stopwords().count(lowercase_ascii(token)) > 0;
}

std::string normalize_token(const std::string& token,
                            const NormalizationPolicy& policy) {
  return policy.case_sensitive ? token : lowercase_ascii(token);
}

std::string normalize_surface(std::span<const std::string> tokens,
                              const NormalizationPolicy& policy) {
  std::size_t first = 0;
  std::size_t last = tokens.size();
  // Stripping never empties the surface.
  if (policy.strip_leading_article && last - first > 1 &&
      lowercase_ascii(tokens[first]) == "the") {
    ++first;
  }
  if (policy.strip_trailing_possessive && last - first > 1 &&
      lowercase_ascii(tokens[last - 1]) == "'s") {
    --last;
  }
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) out += ' ';
    out += tokens[i];
  }
  return policy.case_sensitive ? out : lowercase_ascii(out);
}

}  // namespace ieval
