#pragma once

#include <set>
#include <span>
#include <string>

namespace ieval {

// Controls how mention surfaces are compared against the training set.
// Stopword matching is case-insensitive regardless of case_sensitive:
// stopwords are function words.
struct NormalizationPolicy {
  bool case_sensitive = true;
  bool strip_leading_article = false;    // drop "the" at the start
  bool strip_trailing_possessive = false;  // drop "'s" at the end
  bool type_sensitive = true;
  std::set<std::string> stopwords;  // lowercased; empty means default_stopwords()

  const std::set<std::string>& effective_stopwords() const;
};

// Fixed, versioned default list of 25 English function words.
const std::set<std::string>& default_stopwords();

// One lowercased token per line; '#' lines and blanks ignored.
std::set<std::string> load_stopword_file(const std::string& path);

bool is_stopword(const std::string& token, const NormalizationPolicy& policy);

std::string lowercase_ascii(std::string s);

// Comparison key for a single token under the policy.
std::string normalize_token(const std::string& token,
                            const NormalizationPolicy& policy);

// Comparison key for a mention surface: optional article/possessive
// stripping (never below one token), space-joined, case-folded if the
// policy is case-insensitive.
std::string normalize_surface(std::span<const std::string> tokens,
                              const NormalizationPolicy& policy);

}  // namespace ieval
