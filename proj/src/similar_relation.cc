#include "semprefetch/similar_relation.h"

#include <algorithm>
#include <stdexcept>

namespace semprefetch {

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      cells_(row_labels_.size() * col_labels_.size(), 0.0) {}

void SimilarityMatrix::set(std::size_t r, std::size_t c, double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw std::out_of_range("similarity score outside [0,1]: " + std::to_string(score));
  }
  cells_.at(r * cols() + c) = score;
}

SimilarityMatrix BuildMatrix(const TokenList& user_norm, const TokenList& anchor_norm,
                             const TokenSimilarityFn& simfn) {
  SimilarityMatrix m(user_norm.Lemmas(), anchor_norm.Lemmas());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, simfn(user_norm[r], anchor_norm[c]));
  }
  return m;
}

SimilarVerdict SentenceSimilarity(const SimilarityMatrix& matrix) {
  SimilarVerdict v;
  v.divisor = std::max(matrix.rows(), matrix.cols());
  if (matrix.rows() == 0 || matrix.cols() == 0) {
    v.row_maxima.assign(matrix.rows(), 0.0);
    return v;
  }
  v.row_maxima.reserve(matrix.rows());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    double best = matrix.at(r, 0);
    for (std::size_t c = 1; c < matrix.cols(); ++c) best = std::max(best, matrix.at(r, c));
    v.row_maxima.push_back(best);
    v.total += best;
  }
  v.probability = v.total / static_cast<double>(v.divisor);
  return v;
}

SimilarAnalysis AnalyzeSimilar(std::string_view user_phrase, std::string_view anchor_phrase,
                               const LexicalResources& lexical, const SimilarityTable& table,
                               const Ontology* ont, double threshold) {
  SimilarAnalysis a;
  a.user_tokens = Normalize(user_phrase, lexical);
  a.anchor_tokens = Normalize(anchor_phrase, lexical);
  a.matrix = BuildMatrix(a.user_tokens, a.anchor_tokens, [&](const Token& x, const Token& y) {
    return TokenSimilarity(x, y, table, ont);
  });
  a.verdict = SentenceSimilarity(a.matrix);
  a.verdict.passes = a.matrix.rows() > 0 && a.matrix.cols() > 0 && a.verdict.probability >= threshold;
  return a;
}

SimilarVerdict DetectSimilar(std::string_view user_phrase, std::string_view anchor_phrase,
                             const LexicalResources& lexical, const SimilarityTable& table,
                             const Ontology* ont, double threshold) {
  return AnalyzeSimilar(user_phrase, anchor_phrase, lexical, table, ont, threshold).verdict;
}

}  // namespace semprefetch
