#include "semprefetch/resources.h"

#include <fstream>
#include <sstream>

#include "semprefetch/errors.h"

namespace semprefetch {
namespace {

std::string ReadSource(const std::optional<std::filesystem::path>& path, std::string_view fallback) {
  if (!path) return std::string(fallback);
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw ResourceError("cannot open resource file " + path->string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Resources BuildResources(std::istream& stopwords, std::istream& lemmas, std::istream& simtable,
                         std::istream* ontology, std::istream& numbers,
                         std::uint64_t successor_word_bound) {
  Resources r;
  r.table = SimilarityTable::Read(simtable);
  if (ontology != nullptr) r.ontology = Ontology::Read(*ontology);
  r.numbers = NumberLexicon::Read(numbers).Bounded(successor_word_bound);

  std::vector<std::string> vocabulary = r.table.Vocabulary();
  if (r.ontology) {
    vocabulary.insert(vocabulary.end(), r.ontology->labels().begin(), r.ontology->labels().end());
  }
  r.lexical = LexicalResources(ReadStopwords(stopwords), ReadLemmaMap(lemmas), {})
                  .WithCompounds(vocabulary);
  return r;
}

Resources LoadResources(const ResourcePaths& paths, std::uint64_t successor_word_bound) {
  std::istringstream stopwords(ReadSource(paths.stopwords, bundled::StopwordsFile()));
  std::istringstream lemmas(ReadSource(paths.lemmas, bundled::LemmasFile()));
  std::istringstream table(ReadSource(paths.simtable, bundled::SimilarityTableFile()));
  std::istringstream numbers(ReadSource(paths.numbers, bundled::NumbersFile()));
  const bool no_ontology = paths.ontology && paths.ontology->string() == "none";
  std::istringstream ontology(no_ontology ? std::string() : ReadSource(paths.ontology, bundled::OntologyFile()));
  return BuildResources(stopwords, lemmas, table, no_ontology ? nullptr : &ontology, numbers,
                        successor_word_bound);
}

const Resources& DefaultResources() {
  static const Resources kDefaults = LoadResources();
  return kDefaults;
}

}  // namespace semprefetch
