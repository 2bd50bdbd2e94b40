#include "semprefetch/resources.h"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "semprefetch/errors.h"

namespace semprefetch {
namespace {

const std::string kData = std::string(SEMPREFETCH_SOURCE_DIR) + "/data/";

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(BundledResourcesTest, MatchDataDirectory) {
  EXPECT_EQ(bundled::StopwordsFile(), Slurp(kData + "stopwords.txt"));
  EXPECT_EQ(bundled::LemmasFile(), Slurp(kData + "lemmas.tsv"));
  EXPECT_EQ(bundled::SimilarityTableFile(), Slurp(kData + "simtable.tsv"));
  EXPECT_EQ(bundled::OntologyFile(), Slurp(kData + "ontology.tsv"));
  EXPECT_EQ(bundled::NumbersFile(), Slurp(kData + "numbers.tsv"));
}

TEST(BundledResourcesTest, DefaultsAreComplete) {
  const Resources& r = DefaultResources();
  ASSERT_NE(r.ontology_ptr(), nullptr);
  EXPECT_TRUE(r.lexical.IsCompound("operating system"));
  EXPECT_TRUE(r.lexical.IsStopword("the"));
  EXPECT_FALSE(r.lexical.IsStopword("next"));
  EXPECT_EQ(r.lexical.LemmaOf("best"), "good");
  EXPECT_EQ(r.table.Lookup("operating system", "computer"), 0.2);
  EXPECT_EQ(r.numbers.Find("twenty"), 20u);
}

TEST(LoadResourcesTest, PathsOverrideDefaults) {
  ResourcePaths paths;
  paths.simtable = std::string(SEMPREFETCH_SOURCE_DIR) + "/tests/fixtures/priority_simtable.tsv";
  const Resources r = LoadResources(paths);
  EXPECT_EQ(r.table.Lookup("beta", "alpha"), 0.95);
  EXPECT_EQ(r.table.Lookup("book", "computer"), std::nullopt);
  // Ontology labels still feed the compound vocabulary.
  EXPECT_TRUE(r.lexical.IsCompound("operating system"));
}

TEST(LoadResourcesTest, OntologyCanBeDisabled) {
  ResourcePaths paths;
  paths.ontology = "none";
  const Resources r = LoadResources(paths);
  EXPECT_EQ(r.ontology_ptr(), nullptr);
  EXPECT_TRUE(r.lexical.IsCompound("operating system"));
}

TEST(LoadResourcesTest, SuccessorBoundTrimsNumberWords) {
  const Resources r = LoadResources({}, 5);
  EXPECT_EQ(r.numbers.Find("five"), 5u);
  EXPECT_EQ(r.numbers.Find("six"), std::nullopt);
}

TEST(LoadResourcesTest, MissingOrMalformedFilesThrow) {
  ResourcePaths missing;
  missing.stopwords = "/nonexistent/stopwords.txt";
  EXPECT_THROW(LoadResources(missing), ResourceError);
  ResourcePaths malformed;
  malformed.ontology = std::string(SEMPREFETCH_SOURCE_DIR) + "/tests/fixtures/priority_simtable.tsv";
  EXPECT_THROW(LoadResources(malformed), ResourceError);
}

TEST(BuildResourcesTest, FromStreams) {
  std::istringstream stop("the\n");
  std::istringstream lemmas("went\tgo\n");
  std::istringstream table("web page\thtml\t0.6\n");
  std::istringstream numbers("one\t1\ntwo\t2\n");
  const Resources r = BuildResources(stop, lemmas, table, nullptr, numbers);
  EXPECT_TRUE(r.lexical.IsCompound("web page"));
  EXPECT_EQ(r.lexical.LemmaOf("went"), "go");
  EXPECT_EQ(r.numbers.words().size(), 2u);
}

}  // namespace
}  // namespace semprefetch
