#ifndef SEMPREFETCH_SEQUENTIAL_RELATION_H_
#define SEMPREFETCH_SEQUENTIAL_RELATION_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "semprefetch/text_pipeline.h"

namespace semprefetch {

// Number words recognised as sequence positions ("one" -> 1, ...).
class NumberLexicon {
 public:
  NumberLexicon() = default;
  // Throws ResourceError when two words share a value or a word is not a
  // lowercase single token.
  explicit NumberLexicon(std::map<std::string, std::uint64_t> word_values);

  // English one..twenty, truncated to words whose value is <= max_value.
  static NumberLexicon English(std::uint64_t max_value = 20);
  // TSV word<TAB>value, '#' comments.
  static NumberLexicon Read(std::istream& in);

  std::optional<std::uint64_t> Find(std::string_view word) const;
  // Keeps only words whose value is <= max_value.
  NumberLexicon Bounded(std::uint64_t max_value) const;
  const std::map<std::string, std::uint64_t, std::less<>>& words() const { return words_; }

 private:
  std::map<std::string, std::uint64_t, std::less<>> words_;
};

enum class SequentialReason { kNone, kNextMarker, kNumericSuccessor };

std::string_view ReasonName(SequentialReason reason);

struct SequentialVerdict {
  bool is_sequential = false;
  SequentialReason reason = SequentialReason::kNone;

  friend bool operator==(const SequentialVerdict&, const SequentialVerdict&) = default;
};

// Raw anchor tokens hold "next", ">" or ">>" and number at most three.
bool IsNextMarker(const TokenList& anchor_tokens);

// Decimal digit strings parse to their value; number words go through the
// lexicon. Anything else, including digit strings that overflow, is absent.
std::optional<std::uint64_t> TokenNumber(const Token& token, const NumberLexicon& lex);

// number(b) == number(a) + 1, whatever the spelling on either side.
bool IsSuccessor(const Token& a, const Token& b, const NumberLexicon& lex);

// Both parent URLs must be equal (case-insensitive). Fires on a short
// next-marker anchor, or on equal-length token lists that agree at every
// position except for at least one successor pair. Positions holding the
// same number in different spellings ("1" / "one") agree.
SequentialVerdict DetectSequential(const TokenList& user_tokens, const TokenList& anchor_tokens,
                                   std::string_view current_parent, std::string_view link_parent,
                                   const NumberLexicon& lex);

}  // namespace semprefetch

#endif  // SEMPREFETCH_SEQUENTIAL_RELATION_H_
