#ifndef SEMPREFETCH_ONTOLOGY_SIM_H_
#define SEMPREFETCH_ONTOLOGY_SIM_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semprefetch/text_pipeline.h"

namespace semprefetch {

// Rooted concept tree. Labels may contain spaces ("operating system").
class Ontology {
 public:
  // Builds the tree from (child, parent) edges. The unique label that never
  // appears as a child is the root. Throws ResourceError when there is not
  // exactly one root, a child has two parents, or the parent links cycle.
  static Ontology FromEdges(const std::vector<std::pair<std::string, std::string>>& edges);
  // Single-node tree.
  static Ontology RootOnly(std::string root);
  // TSV child<TAB>parent, '#' comments.
  static Ontology Read(std::istream& in);

  bool Contains(const std::string& label) const { return index_.contains(label); }
  const std::string& root() const { return labels_[0]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  // Parent of a non-root node; std::nullopt for the root.
  std::optional<std::string> Parent(const std::string& label) const;
  // Edge count from the root; depth(root) == 0. Throws NodeNotFound.
  int Depth(const std::string& label) const;
  // Deepest node that is an ancestor-or-self of both. Throws NodeNotFound.
  const std::string& Lca(const std::string& x, const std::string& y) const;

 private:
  Ontology() = default;
  std::size_t IndexOf(const std::string& label) const;

  // Index 0 is the root; parent_[0] == 0.
  std::vector<std::string> labels_;
  std::vector<std::size_t> parent_;
  std::vector<int> depth_;
  std::unordered_map<std::string, std::size_t> index_;
};

// 2 * depth(lca) / (depth(x) + depth(y)), with dice(x, x) == 1.
double DiceSimilarity(const Ontology& ont, const std::string& x, const std::string& y);

// Precomputed word-pair scores. Each pair is looked up in both orders.
class SimilarityTable {
 public:
  SimilarityTable() = default;

  // Throws ResourceError for a score outside [0, 1] or a pair listed twice
  // with different scores.
  void Set(const std::string& a, const std::string& b, double score);
  std::optional<double> Lookup(const std::string& a, const std::string& b) const;

  std::size_t size() const { return entries_.size(); }
  // Every lemma mentioned by any entry.
  std::vector<std::string> Vocabulary() const;

  // TSV lemma_a<TAB>lemma_b<TAB>score, '#' comments.
  static SimilarityTable Read(std::istream& in);

 private:
  static std::string Key(const std::string& a, const std::string& b);
  std::unordered_map<std::string, double> entries_;
};

// Resolution order: equal lemmas -> 1; table (a, b) then (b, a); Dice on the
// ontology when both lemmas are nodes; otherwise 0.
double TokenSimilarity(const Token& a, const Token& b, const SimilarityTable& table,
                       const Ontology* ont);

}  // namespace semprefetch

#endif  // SEMPREFETCH_ONTOLOGY_SIM_H_
