#ifndef SEMPREFETCH_TESTS_SUPPORT_ORACLES_H_
#define SEMPREFETCH_TESTS_SUPPORT_ORACLES_H_

// Reference computations used to check the library. None of them call into
// the code under test.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semprefetch::testing {

// A rooted tree as a parent array; parent[root] == -1.
struct ParentTree {
  std::vector<int> parent;
  int root = 0;

  std::string Label(int node) const { return "n" + std::to_string(node); }
  std::vector<std::pair<std::string, std::string>> Edges() const;
};

// Uniform random recursive tree on `nodes` nodes with shuffled labels.
ParentTree RandomTree(std::mt19937_64& rng, int nodes);

// Node, its parent, ..., root.
std::vector<int> AncestorPath(const ParentTree& t, int node);
int OracleDepth(const ParentTree& t, int node);
// Deepest member of the intersection of the two ancestor sets.
int OracleLca(const ParentTree& t, int x, int y);
double OracleDice(const ParentTree& t, int x, int y);

// Hops from `label` to the root, following child<TAB>parent lines of a file.
int PathWalkDepth(const std::string& tsv_path, const std::string& label);

// Every way to cut `words` into pieces that are single words or entries of
// `vocabulary`; returns the cut whose piece-length sequence is
// lexicographically largest (greedy longest match from the left).
std::vector<std::string> OracleSegmentation(const std::vector<std::string>& words,
                                            const std::set<std::string>& vocabulary);

// Random phrase of 0..10 words drawn from a pool of stop words, inflected
// and irregular forms, punctuation, numbers and whole compounds. A compound
// never appears split, so normalizing twice gives the same tokens.
std::string RandomPhrase(std::mt19937_64& rng);

// Parent URL via the RFC 3986 appendix B regular expression.
std::string OracleParentUrl(const std::string& url);

}  // namespace semprefetch::testing

#endif  // SEMPREFETCH_TESTS_SUPPORT_ORACLES_H_
