#ifndef SEMPREFETCH_TEXT_PIPELINE_H_
#define SEMPREFETCH_TEXT_PIPELINE_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace semprefetch {

// A normalized lexical unit. `lemma` is lowercase and trimmed; it holds an
// internal space exactly when the token is a merged compound.
struct Token {
  std::string surface;
  std::string lemma;
  bool is_compound = false;

  static Token FromWord(std::string surface);

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenList {
  std::vector<Token> tokens;
  bool sorted = false;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
  auto begin() const { return tokens.begin(); }
  auto end() const { return tokens.end(); }

  std::vector<std::string> Lemmas() const;
  // Lemmas joined by single spaces.
  std::string Render() const;
};

// Word lists behind stop-word removal, lemmatization and compound merging.
// Read-only once built.
class LexicalResources {
 public:
  LexicalResources() = default;

  // Throws ResourceError when an entry is not a lowercase single token or
  // when a lemma_map value is not already in root form.
  LexicalResources(std::unordered_set<std::string> stopwords,
                   std::unordered_map<std::string, std::string> lemma_map,
                   std::unordered_set<std::string> compound_vocabulary);

  bool IsStopword(std::string_view word) const;
  // Root form of a single word: the irregular map first, then the suffix
  // stemmer run to a fixpoint, then the map again on the stem.
  std::string LemmaOf(const std::string& word) const;
  bool IsCompound(const std::string& lemma) const;

  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }
  const std::unordered_map<std::string, std::string>& lemma_map() const {
    return lemma_map_;
  }
  const std::unordered_set<std::string>& compound_vocabulary() const {
    return compounds_;
  }
  // Word count of the longest compound in the vocabulary.
  std::size_t max_compound_words() const { return max_compound_words_; }

  // Returns a copy whose compound vocabulary additionally holds every
  // multi-word entry of `labels`.
  LexicalResources WithCompounds(const std::vector<std::string>& labels) const;

 private:
  std::unordered_set<std::string> stopwords_;
  std::unordered_map<std::string, std::string> lemma_map_;
  std::unordered_set<std::string> compounds_;
  std::size_t max_compound_words_ = 1;
};

// One lowercase token per line; '#' starts a comment.
std::unordered_set<std::string> ReadStopwords(std::istream& in);
// Two tab-separated columns, surface then lemma.
std::unordered_map<std::string, std::string> ReadLemmaMap(std::istream& in);

// Suffix stripper for plural -s/-es/-ies, -ing and -ed. A single step;
// returns the word unchanged when no rule applies.
std::string StemOnce(const std::string& word);
// StemOnce applied until nothing changes.
std::string Stem(const std::string& word);

TokenList Tokenize(std::string_view text);
TokenList RemoveStopwords(const TokenList& tokens, const LexicalResources& res);
TokenList Lemmatize(const TokenList& tokens, const LexicalResources& res);
TokenList DetectCompounds(const TokenList& tokens, const LexicalResources& res);
TokenList SortTokens(const TokenList& tokens);
// tokenize -> remove stop words -> lemmatize -> detect compounds -> sort.
TokenList Normalize(std::string_view text, const LexicalResources& res);

}  // namespace semprefetch

#endif  // SEMPREFETCH_TEXT_PIPELINE_H_
