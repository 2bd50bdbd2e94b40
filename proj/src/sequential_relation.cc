#include "semprefetch/sequential_relation.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>

#include "semprefetch/errors.h"

namespace semprefetch {
namespace {

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

bool IsDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

constexpr std::array<std::string_view, 20> kEnglishNumbers = {
    "one",    "two",    "three",    "four",     "five",    "six",       "seven",
    "eight",  "nine",   "ten",      "eleven",   "twelve",  "thirteen",  "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};

}  // namespace

NumberLexicon::NumberLexicon(std::map<std::string, std::uint64_t> word_values) {
  std::set<std::uint64_t> seen;
  for (auto& [word, value] : word_values) {
    if (word.empty() || std::any_of(word.begin(), word.end(), [](char c) {
          return std::isspace(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c));
        })) {
      throw ResourceError("number word is not a lowercase single token: '" + word + "'");
    }
    if (!seen.insert(value).second) {
      throw ResourceError("number lexicon maps two words to " + std::to_string(value));
    }
    words_.emplace(word, value);
  }
}

NumberLexicon NumberLexicon::English(std::uint64_t max_value) {
  std::map<std::string, std::uint64_t> words;
  for (std::size_t i = 0; i < kEnglishNumbers.size() && i + 1 <= max_value; ++i) {
    words.emplace(std::string(kEnglishNumbers[i]), i + 1);
  }
  return NumberLexicon(std::move(words));
}

NumberLexicon NumberLexicon::Read(std::istream& in) {
  std::map<std::string, std::uint64_t> words;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ResourceError("number lexicon line " + std::to_string(lineno) + ": expected word<TAB>value");
    }
    std::string word = line.substr(0, tab);
    std::string value_text = line.substr(tab + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc() || ptr != value_text.data() + value_text.size()) {
      throw ResourceError("number lexicon line " + std::to_string(lineno) + ": bad value '" + value_text + "'");
    }
    if (!words.emplace(word, value).second) {
      throw ResourceError("number lexicon lists '" + word + "' twice");
    }
  }
  return NumberLexicon(std::move(words));
}

std::optional<std::uint64_t> NumberLexicon::Find(std::string_view word) const {
  auto it = words_.find(word);
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

NumberLexicon NumberLexicon::Bounded(std::uint64_t max_value) const {
  std::map<std::string, std::uint64_t> kept;
  for (const auto& [word, value] : words_) {
    if (value <= max_value) kept.emplace(word, value);
  }
  return NumberLexicon(std::move(kept));
}

std::string_view ReasonName(SequentialReason reason) {
  switch (reason) {
    case SequentialReason::kNextMarker:
      return "next_marker";
    case SequentialReason::kNumericSuccessor:
      return "numeric_successor";
    case SequentialReason::kNone:
      break;
  }
  return "none";
}

bool IsNextMarker(const TokenList& anchor_tokens) {
  if (anchor_tokens.empty() || anchor_tokens.size() > 3) return false;
  return std::any_of(anchor_tokens.begin(), anchor_tokens.end(), [](const Token& t) {
    return EqualsIgnoreCase(t.lemma, "next") || t.lemma == ">" || t.lemma == ">>";
  });
}

std::optional<std::uint64_t> TokenNumber(const Token& token, const NumberLexicon& lex) {
  const std::string& text = token.lemma;
  if (IsDigits(text)) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc()) return std::nullopt;
    return value;
  }
  std::string lowered = text;
  for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lex.Find(lowered);
}

bool IsSuccessor(const Token& a, const Token& b, const NumberLexicon& lex) {
  const auto x = TokenNumber(a, lex);
  const auto y = TokenNumber(b, lex);
  if (!x || !y || *x == std::numeric_limits<std::uint64_t>::max()) return false;
  return *y == *x + 1;
}

SequentialVerdict DetectSequential(const TokenList& user_tokens, const TokenList& anchor_tokens,
                                   std::string_view current_parent, std::string_view link_parent,
                                   const NumberLexicon& lex) {
  if (!EqualsIgnoreCase(current_parent, link_parent)) return {};
  if (IsNextMarker(anchor_tokens)) return {true, SequentialReason::kNextMarker};
  if (user_tokens.size() != anchor_tokens.size()) return {};

  bool saw_successor = false;
  for (std::size_t i = 0; i < user_tokens.size(); ++i) {
    const Token& u = user_tokens[i];
    const Token& a = anchor_tokens[i];
    if (EqualsIgnoreCase(u.lemma, a.lemma)) continue;
    const auto un = TokenNumber(u, lex);
    const auto an = TokenNumber(a, lex);
    if (un && an && *un == *an) continue;
    if (!IsSuccessor(u, a, lex)) return {};
    saw_successor = true;
  }
  if (!saw_successor) return {};
  return {true, SequentialReason::kNumericSuccessor};
}

}  // namespace semprefetch
