#ifndef SEMPREFETCH_SIMILAR_RELATION_H_
#define SEMPREFETCH_SIMILAR_RELATION_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "semprefetch/ontology_sim.h"
#include "semprefetch/text_pipeline.h"

namespace semprefetch {

inline constexpr double kDefaultThreshold = 0.7;

using TokenSimilarityFn = std::function<double(const Token&, const Token&)>;

// Pairwise similarities. Rows are the user keyword tokens, columns the
// anchor tokens.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  double at(std::size_t r, std::size_t c) const { return cells_[r * cols() + c]; }
  // Throws std::out_of_range for a score outside [0, 1].
  void set(std::size_t r, std::size_t c, double score);

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> cells_;
};

struct SimilarVerdict {
  double probability = 0.0;
  std::vector<double> row_maxima;
  double total = 0.0;
  // Length of the longer of the two token lists.
  std::size_t divisor = 0;
  bool passes = false;
};

SimilarityMatrix BuildMatrix(const TokenList& user_norm, const TokenList& anchor_norm,
                             const TokenSimilarityFn& simfn);

// Row maxima, their sum, and sum / max(rows, cols). An empty side scores 0.
// `passes` is left false.
SimilarVerdict SentenceSimilarity(const SimilarityMatrix& matrix);

// Everything the similar detector computes for one phrase pair, kept for
// reporting.
struct SimilarAnalysis {
  TokenList user_tokens;
  TokenList anchor_tokens;
  SimilarityMatrix matrix;
  SimilarVerdict verdict;
};

SimilarAnalysis AnalyzeSimilar(std::string_view user_phrase, std::string_view anchor_phrase,
                               const LexicalResources& lexical, const SimilarityTable& table,
                               const Ontology* ont, double threshold = kDefaultThreshold);

// passes == (probability >= threshold).
SimilarVerdict DetectSimilar(std::string_view user_phrase, std::string_view anchor_phrase,
                             const LexicalResources& lexical, const SimilarityTable& table,
                             const Ontology* ont, double threshold = kDefaultThreshold);

}  // namespace semprefetch

#endif  // SEMPREFETCH_SIMILAR_RELATION_H_
