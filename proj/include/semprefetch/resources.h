#ifndef SEMPREFETCH_RESOURCES_H_
#define SEMPREFETCH_RESOURCES_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string_view>

#include "semprefetch/ontology_sim.h"
#include "semprefetch/sequential_relation.h"
#include "semprefetch/text_pipeline.h"

namespace semprefetch {

// Everything the detectors read. Immutable once loaded.
struct Resources {
  LexicalResources lexical;
  SimilarityTable table;
  std::optional<Ontology> ontology;
  NumberLexicon numbers;

  const Ontology* ontology_ptr() const { return ontology ? &*ontology : nullptr; }
};

// Unset paths fall back to the bundled defaults. An ontology path of "none"
// disables the ontology.
struct ResourcePaths {
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> lemmas;
  std::optional<std::filesystem::path> simtable;
  std::optional<std::filesystem::path> ontology;
  std::optional<std::filesystem::path> numbers;
};

// Bundled resource files, compiled in from data/.
namespace bundled {
std::string_view StopwordsFile();
std::string_view LemmasFile();
std::string_view SimilarityTableFile();
std::string_view OntologyFile();
std::string_view NumbersFile();
}  // namespace bundled

// The compound vocabulary is every multi-word lemma in the table and the
// ontology. Number words above successor_word_bound are dropped. Throws
// ResourceError.
Resources BuildResources(std::istream& stopwords, std::istream& lemmas, std::istream& simtable,
                         std::istream* ontology, std::istream& numbers,
                         std::uint64_t successor_word_bound = 20);

// Throws ResourceError when a file cannot be read or is malformed.
Resources LoadResources(const ResourcePaths& paths = {}, std::uint64_t successor_word_bound = 20);

// Shared instance built from the bundled files.
const Resources& DefaultResources();

}  // namespace semprefetch

#endif  // SEMPREFETCH_RESOURCES_H_
