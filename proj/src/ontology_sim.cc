#include "semprefetch/ontology_sim.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "semprefetch/errors.h"

namespace semprefetch {
namespace {

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits a TSV line after dropping any '#' comment. Empty result for blank lines.
std::vector<std::string> SplitTsv(const std::string& line) {
  const auto hash = line.find('#');
  std::string body = hash == std::string::npos ? line : line.substr(0, hash);
  if (Trim(body).empty()) return {};
  std::vector<std::string> cols;
  std::size_t start = 0;
  for (std::size_t tab = body.find('\t'); tab != std::string::npos; tab = body.find('\t', start)) {
    cols.push_back(Trim(std::string_view(body).substr(start, tab - start)));
    start = tab + 1;
  }
  cols.push_back(Trim(std::string_view(body).substr(start)));
  return cols;
}

}  // namespace

Ontology Ontology::FromEdges(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, std::string> parent_of;
  std::set<std::string> all;  // ordered so node indices are reproducible
  for (const auto& [child, parent] : edges) {
    if (child.empty() || parent.empty()) throw ResourceError("ontology edge with empty label");
    if (child == parent) throw ResourceError("ontology node is its own parent: " + child);
    auto [it, inserted] = parent_of.emplace(child, parent);
    if (!inserted && it->second != parent) {
      throw ResourceError("ontology node has two parents: " + child);
    }
    all.insert(child);
    all.insert(parent);
  }
  std::vector<std::string> roots;
  for (const auto& label : all) {
    if (!parent_of.contains(label)) roots.push_back(label);
  }
  if (roots.size() != 1) {
    throw ResourceError("ontology must have exactly one root, found " + std::to_string(roots.size()));
  }

  Ontology ont;
  ont.labels_.push_back(roots[0]);
  ont.index_[roots[0]] = 0;
  for (const auto& label : all) {
    if (label == roots[0]) continue;
    ont.index_[label] = ont.labels_.size();
    ont.labels_.push_back(label);
  }
  const std::size_t n = ont.labels_.size();
  ont.parent_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) ont.parent_[i] = ont.index_.at(parent_of.at(ont.labels_[i]));

  // With one root and one parent per node, a node fails to reach the root
  // only by sitting on a cycle.
  ont.depth_.assign(n, -1);
  ont.depth_[0] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::size_t> path;
    std::size_t cur = i;
    while (ont.depth_[cur] < 0) {
      path.push_back(cur);
      if (path.size() > n) throw ResourceError("ontology parent links form a cycle at " + ont.labels_[i]);
      cur = ont.parent_[cur];
    }
    int d = ont.depth_[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) ont.depth_[*it] = ++d;
  }
  return ont;
}

Ontology Ontology::RootOnly(std::string root) {
  Ontology ont;
  ont.index_[root] = 0;
  ont.labels_.push_back(std::move(root));
  ont.parent_.push_back(0);
  ont.depth_.push_back(0);
  return ont;
}

Ontology Ontology::Read(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto cols = SplitTsv(line);
    if (cols.empty()) continue;
    if (cols.size() != 2) {
      throw ResourceError("ontology line " + std::to_string(lineno) + ": expected child<TAB>parent");
    }
    edges.emplace_back(std::move(cols[0]), std::move(cols[1]));
  }
  if (edges.empty()) throw ResourceError("ontology file has no edges");
  return FromEdges(edges);
}

std::size_t Ontology::IndexOf(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw NodeNotFound(label);
  return it->second;
}

std::optional<std::string> Ontology::Parent(const std::string& label) const {
  const std::size_t i = IndexOf(label);
  if (i == 0) return std::nullopt;
  return labels_[parent_[i]];
}

int Ontology::Depth(const std::string& label) const { return depth_[IndexOf(label)]; }

const std::string& Ontology::Lca(const std::string& x, const std::string& y) const {
  std::size_t a = IndexOf(x);
  std::size_t b = IndexOf(y);
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return labels_[a];
}

double DiceSimilarity(const Ontology& ont, const std::string& x, const std::string& y) {
  const int dx = ont.Depth(x);
  const int dy = ont.Depth(y);
  if (x == y) return 1.0;
  // x != y in a tree means at most one of them is the root, so dx + dy > 0.
  const int common = ont.Depth(ont.Lca(x, y));
  return 2.0 * common / static_cast<double>(dx + dy);
}

std::string SimilarityTable::Key(const std::string& a, const std::string& b) {
  return a + '\t' + b;
}

void SimilarityTable::Set(const std::string& a, const std::string& b, double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw ResourceError("similarity for (" + a + ", " + b + ") outside [0,1]: " + std::to_string(score));
  }
  for (const auto& key : {Key(a, b), Key(b, a)}) {
    if (auto it = entries_.find(key); it != entries_.end() && it->second != score) {
      throw ResourceError("conflicting similarity scores for (" + a + ", " + b + ")");
    }
  }
  entries_[Key(a, b)] = score;
}

std::optional<double> SimilarityTable::Lookup(const std::string& a, const std::string& b) const {
  if (auto it = entries_.find(Key(a, b)); it != entries_.end()) return it->second;
  if (auto it = entries_.find(Key(b, a)); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> SimilarityTable::Vocabulary() const {
  std::set<std::string> words;
  for (const auto& [key, score] : entries_) {
    const auto tab = key.find('\t');
    words.insert(key.substr(0, tab));
    words.insert(key.substr(tab + 1));
  }
  return {words.begin(), words.end()};
}

SimilarityTable SimilarityTable::Read(std::istream& in) {
  SimilarityTable table;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto cols = SplitTsv(line);
    if (cols.empty()) continue;
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty()) {
      throw ResourceError("similarity table line " + std::to_string(lineno) +
                          ": expected lemma_a<TAB>lemma_b<TAB>score");
    }
    double score = 0.0;
    const auto& text = cols[2];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), score);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ResourceError("similarity table line " + std::to_string(lineno) + ": bad score '" + text + "'");
    }
    table.Set(cols[0], cols[1], score);
  }
  return table;
}

double TokenSimilarity(const Token& a, const Token& b, const SimilarityTable& table,
                       const Ontology* ont) {
  if (a.lemma == b.lemma) return 1.0;
  if (auto score = table.Lookup(a.lemma, b.lemma)) return *score;
  if (ont != nullptr && ont->Contains(a.lemma) && ont->Contains(b.lemma)) {
    return DiceSimilarity(*ont, a.lemma, b.lemma);
  }
  return 0.0;
}

}  // namespace semprefetch
