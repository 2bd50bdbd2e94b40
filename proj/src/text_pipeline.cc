#include "semprefetch/text_pipeline.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "semprefetch/errors.h"

namespace semprefetch {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool IsPunct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool HasVowel(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return IsVowel(c) || c == 'y'; });
}

// "runn" -> "run"; l, s and z doubles are legitimate word endings.
std::string Undouble(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
  }
  return stem;
}

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Strips an inline '#' comment and surrounding whitespace. Tabs inside the
// line are kept because the TSV readers split on them.
std::string StripComment(const std::string& line) {
  const auto hash = line.find('#');
  std::string body = hash == std::string::npos ? line : line.substr(0, hash);
  while (!body.empty() && (body.back() == '\r' || body.back() == '\n' || body.back() == ' ')) {
    body.pop_back();
  }
  return body;
}

bool IsLowercaseWord(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return IsSpace(c) || std::isupper(static_cast<unsigned char>(c));
  });
}

std::size_t WordCount(std::string_view s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), ' ')) + 1;
}

}  // namespace

Token Token::FromWord(std::string surface) {
  Token t;
  t.lemma = ToLower(surface);
  t.surface = std::move(surface);
  t.is_compound = false;
  return t;
}

std::vector<std::string> TokenList::Lemmas() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.lemma);
  return out;
}

std::string TokenList::Render() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.lemma;
  }
  return out;
}

LexicalResources::LexicalResources(std::unordered_set<std::string> stopwords,
                                   std::unordered_map<std::string, std::string> lemma_map,
                                   std::unordered_set<std::string> compound_vocabulary)
    : stopwords_(std::move(stopwords)), lemma_map_(std::move(lemma_map)) {
  for (const auto& w : stopwords_) {
    if (!IsLowercaseWord(w)) throw ResourceError("stop word is not a lowercase single token: '" + w + "'");
  }
  for (const auto& [surface, lemma] : lemma_map_) {
    if (!IsLowercaseWord(surface) || !IsLowercaseWord(lemma)) {
      throw ResourceError("lemma map entry is not lowercase single tokens: '" + surface + "'");
    }
  }
  for (const auto& [surface, lemma] : lemma_map_) {
    if (LemmaOf(lemma) != lemma) {
      throw ResourceError("lemma map value '" + lemma + "' (from '" + surface +
                          "') is not in root form");
    }
  }
  *this = WithCompounds({compound_vocabulary.begin(), compound_vocabulary.end()});
}

bool LexicalResources::IsStopword(std::string_view word) const {
  return stopwords_.contains(std::string(word));
}

std::string LexicalResources::LemmaOf(const std::string& word) const {
  if (auto it = lemma_map_.find(word); it != lemma_map_.end()) return it->second;
  std::string stem = Stem(word);
  if (auto it = lemma_map_.find(stem); it != lemma_map_.end()) return it->second;
  return stem;
}

bool LexicalResources::IsCompound(const std::string& lemma) const {
  return compounds_.contains(lemma);
}

LexicalResources LexicalResources::WithCompounds(const std::vector<std::string>& labels) const {
  LexicalResources out = *this;
  for (const auto& label : labels) {
    // Collapse runs of whitespace so "operating  system" and "operating system" agree.
    std::string canonical;
    std::istringstream words(ToLower(label));
    for (std::string w; words >> w;) {
      if (!canonical.empty()) canonical += ' ';
      canonical += w;
    }
    if (canonical.find(' ') == std::string::npos) continue;
    out.max_compound_words_ = std::max(out.max_compound_words_, WordCount(canonical));
    out.compounds_.insert(std::move(canonical));
  }
  return out;
}

std::unordered_set<std::string> ReadStopwords(std::istream& in) {
  std::unordered_set<std::string> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string word = Trim(StripComment(line));
    if (word.empty()) continue;
    if (!IsLowercaseWord(word)) {
      throw ResourceError("stopwords line " + std::to_string(lineno) +
                          ": expected one lowercase token, got '" + word + "'");
    }
    out.insert(std::move(word));
  }
  return out;
}

std::unordered_map<std::string, std::string> ReadLemmaMap(std::istream& in) {
  std::unordered_map<std::string, std::string> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string body = StripComment(line);
    if (Trim(body).empty()) continue;
    const auto tab = body.find('\t');
    if (tab == std::string::npos) {
      throw ResourceError("lemma map line " + std::to_string(lineno) + ": expected two tab-separated columns");
    }
    std::string surface = Trim(body.substr(0, tab));
    std::string lemma = Trim(body.substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      throw ResourceError("lemma map line " + std::to_string(lineno) + ": empty column");
    }
    out[std::move(surface)] = std::move(lemma);
  }
  return out;
}

std::string StemOnce(const std::string& word) {
  if (!std::all_of(word.begin(), word.end(), IsAlpha)) return word;
  const std::size_t n = word.size();

  if (n > 4 && EndsWith(word, "ies")) return word.substr(0, n - 3) + "y";
  if (n > 4 && EndsWith(word, "sses")) return word.substr(0, n - 2);
  if (n > 4 && EndsWith(word, "es")) {
    std::string_view base(word.data(), n - 2);
    if (EndsWith(base, "x") || EndsWith(base, "z") || EndsWith(base, "ch") || EndsWith(base, "sh")) {
      return std::string(base);
    }
  }
  if (n > 3 && EndsWith(word, "s") && !EndsWith(word, "ss") && !EndsWith(word, "us") &&
      !EndsWith(word, "is")) {
    return word.substr(0, n - 1);
  }
  if (EndsWith(word, "ing") && n - 3 >= 3 && HasVowel(std::string_view(word).substr(0, n - 3))) {
    return Undouble(word.substr(0, n - 3));
  }
  if (EndsWith(word, "ed") && !EndsWith(word, "eed") && n - 2 >= 3 &&
      HasVowel(std::string_view(word).substr(0, n - 2))) {
    return Undouble(word.substr(0, n - 2));
  }
  return word;
}

std::string Stem(const std::string& word) {
  std::string current = word;
  for (std::string next = StemOnce(current); next != current; next = StemOnce(current)) {
    current = std::move(next);
  }
  return current;
}

TokenList Tokenize(std::string_view text) {
  TokenList out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    std::string_view piece = text.substr(i, j - i);
    i = j;
    if (piece.empty()) continue;
    // Sequential markers survive intact.
    if (piece == ">" || piece == ">>") {
      out.tokens.push_back(Token::FromWord(std::string(piece)));
      continue;
    }
    std::size_t b = 0;
    std::size_t e = piece.size();
    while (b < e && IsPunct(piece[b])) ++b;
    while (e > b && IsPunct(piece[e - 1])) --e;
    if (b == e) continue;
    out.tokens.push_back(Token::FromWord(std::string(piece.substr(b, e - b))));
  }
  return out;
}

TokenList RemoveStopwords(const TokenList& tokens, const LexicalResources& res) {
  TokenList out;
  out.sorted = tokens.sorted;
  for (const auto& t : tokens) {
    if (res.IsStopword(t.lemma) || res.IsStopword(ToLower(t.surface))) continue;
    out.tokens.push_back(t);
  }
  return out;
}

TokenList Lemmatize(const TokenList& tokens, const LexicalResources& res) {
  TokenList out;
  out.tokens.reserve(tokens.size());
  for (const auto& t : tokens) {
    Token lemmatized = t;
    if (!t.is_compound) lemmatized.lemma = res.LemmaOf(t.lemma);
    out.tokens.push_back(std::move(lemmatized));
  }
  // Lemmas change, so any earlier ordering is void.
  out.sorted = false;
  return out;
}

TokenList DetectCompounds(const TokenList& tokens, const LexicalResources& res) {
  TokenList out;
  const std::size_t n = tokens.size();
  const std::size_t max_words = res.max_compound_words();
  std::size_t i = 0;
  while (i < n) {
    std::size_t matched = 1;
    for (std::size_t len = std::min(max_words, n - i); len >= 2; --len) {
      std::string joined = tokens[i].lemma;
      for (std::size_t k = 1; k < len; ++k) joined += ' ' + tokens[i + k].lemma;
      if (res.IsCompound(joined)) {
        matched = len;
        break;
      }
    }
    if (matched == 1) {
      out.tokens.push_back(tokens[i]);
    } else {
      Token merged;
      merged.is_compound = true;
      for (std::size_t k = 0; k < matched; ++k) {
        if (k > 0) {
          merged.surface += ' ';
          merged.lemma += ' ';
        }
        merged.surface += tokens[i + k].surface;
        merged.lemma += tokens[i + k].lemma;
      }
      out.tokens.push_back(std::move(merged));
    }
    i += matched;
  }
  out.sorted = false;
  return out;
}

TokenList SortTokens(const TokenList& tokens) {
  TokenList out = tokens;
  std::stable_sort(out.tokens.begin(), out.tokens.end(),
                   [](const Token& a, const Token& b) { return a.lemma < b.lemma; });
  out.sorted = true;
  return out;
}

TokenList Normalize(std::string_view text, const LexicalResources& res) {
  TokenList tokens = RemoveStopwords(Tokenize(text), res);
  // A second pass drops words whose root form is itself a stop word.
  tokens = RemoveStopwords(Lemmatize(tokens, res), res);
  return SortTokens(DetectCompounds(tokens, res));
}

}  // namespace semprefetch
