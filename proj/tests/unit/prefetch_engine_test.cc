#include "semprefetch/prefetch_engine.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "semprefetch/errors.h"
#include "semprefetch/url.h"
#include "support/worked_examples.h"

namespace semprefetch {
namespace {

namespace ex = semprefetch::testing;

const std::string kFixtures = std::string(SEMPREFETCH_SOURCE_DIR) + "/tests/fixtures/";
constexpr const char* kHtmlPage = "http://www.w3schools.com/html/default.asp";

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const Resources& PriorityResources() {
  static const Resources kRes = [] {
    ResourcePaths paths;
    paths.simtable = kFixtures + "priority_simtable.tsv";
    return LoadResources(paths);
  }();
  return kRes;
}

PageSnapshot Page(const std::string& url, std::vector<std::pair<std::string, std::string>> links) {
  PageSnapshot page;
  page.url = url;
  page.parent_url = ParentUrl(url);
  for (auto& [text, href] : links) {
    const std::string abs = *ResolveUrl(url, href);
    page.links.push_back({text, abs, ParentUrl(abs)});
  }
  return page;
}

PrefetchDecision Decision(const std::string& href, Relation rel, double score, std::size_t index) {
  PrefetchDecision d;
  d.link = {"t", href, ParentUrl(href)};
  d.relation = rel;
  d.score = score;
  d.document_index = index;
  return d;
}

TEST(RelationTest, PriorityOrderAndNames) {
  EXPECT_LT(RelationPriority(Relation::kSequential), RelationPriority(Relation::kSimilar));
  EXPECT_LT(RelationPriority(Relation::kSimilar), RelationPriority(Relation::kCauseEffective));
  EXPECT_LT(RelationPriority(Relation::kReferential), RelationPriority(Relation::kNone));
  EXPECT_EQ(RelationName(Relation::kSequential), "sequential");
  EXPECT_EQ(RelationName(Relation::kSimilar), "similar");
  EXPECT_EQ(RelationName(Relation::kNone), "none");
}

TEST(EngineConfigTest, Validate) {
  EngineConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.threshold = 1.5;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.threshold = -0.1;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(EvaluatePageTest, NextSiblingComesFirst) {
  const PageSnapshot page = MakeSnapshot(kHtmlPage, Slurp(kFixtures + "html_default.html"));
  const PageEvaluation eval = EvaluatePageDetailed(page, "HTML tutorials", EngineConfig{}, DefaultResources());
  ASSERT_EQ(eval.list.size(), 2u);
  EXPECT_EQ(eval.list[0].relation, Relation::kSequential);
  EXPECT_EQ(eval.list[0].sequential.reason, SequentialReason::kNextMarker);
  EXPECT_EQ(eval.list[0].link.href, "http://www.w3schools.com/html/html_intro.asp");
  EXPECT_EQ(eval.list[0].score, 1.0);
  EXPECT_FALSE(eval.list[0].similar.has_value());
  // html/html 1 and tutorial/html 2*2/(4+5) via cognition, over 2 tokens.
  EXPECT_EQ(eval.list[1].relation, Relation::kSimilar);
  EXPECT_EQ(eval.list[1].link.anchor_text, "HTML Examples");
  EXPECT_NEAR(eval.list[1].score, (1.0 + 4.0 / 9.0) / 2.0, 1e-12);
  // The "next" link into /css has another parent and stays out.
  ASSERT_EQ(eval.decisions.size(), 5u);
  EXPECT_EQ(eval.decisions[3].link.anchor_text, "next");
  EXPECT_EQ(eval.decisions[3].relation, Relation::kNone);
}

TEST(EvaluatePageTest, CompleteBookLinkIsSimilar) {
  const PageSnapshot page = MakeSnapshot("http://books.example.com/search/results.html",
                                         Slurp(kFixtures + "complete_book.html"));
  const PrefetchList list = EvaluatePage(page, ex::kBestBooksQuery, EngineConfig{}, DefaultResources());
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].relation, Relation::kSimilar);
  EXPECT_NEAR(list[0].score, ex::kCompleteBookProbability, 1e-9);
  EngineConfig strict;
  strict.threshold = 0.8;
  EXPECT_TRUE(EvaluatePage(page, ex::kBestBooksQuery, strict, DefaultResources()).empty());
}

TEST(EvaluatePageTest, NothingAboveThreshold) {
  const PageSnapshot page = Page("http://books.example.com/a/b.html",
                                 {{ex::kFundamentalsAnchor, "http://x.example.org/f.html"},
                                  {"weather forecast", "http://x.example.org/w.html"}});
  const PageEvaluation eval = EvaluatePageDetailed(page, ex::kBestBooksQuery, EngineConfig{}, DefaultResources());
  EXPECT_TRUE(eval.list.empty());
  ASSERT_EQ(eval.decisions.size(), 2u);
  EXPECT_NEAR(eval.decisions[0].score, ex::kFundamentalsProbability, 1e-9);
}

TEST(EvaluatePageTest, SequentialOutranksHighSimilar) {
  const PageSnapshot page = MakeSnapshot("http://www.example.com/catalog/page1.html",
                                         Slurp(kFixtures + "priority_page.html"));
  const PageEvaluation eval = EvaluatePageDetailed(page, "alpha", EngineConfig{}, PriorityResources());
  ASSERT_EQ(eval.list.size(), 2u);
  EXPECT_EQ(eval.list[0].relation, Relation::kSequential);
  EXPECT_EQ(eval.list[0].link.href, "http://www.example.com/catalog/page2.html");
  EXPECT_EQ(eval.list[1].relation, Relation::kSimilar);
  EXPECT_NEAR(eval.list[1].score, 0.95, 1e-12);
  // Document order puts the similar link first.
  EXPECT_EQ(eval.decisions[0].relation, Relation::kSimilar);
}

TEST(EvaluatePageTest, EmptyAnchorsAreSkipped) {
  const PageSnapshot page = Page(kHtmlPage, {{"", "a.html"}, {"next", "b.html"}});
  const PageEvaluation eval = EvaluatePageDetailed(page, "x", EngineConfig{}, DefaultResources());
  ASSERT_EQ(eval.decisions.size(), 1u);
  EXPECT_EQ(eval.decisions[0].document_index, 1u);
}

TEST(AssemblePrefetchListTest, OrdersByRelationScoreThenPosition) {
  const std::vector<PrefetchDecision> decisions = {
      Decision("http://a.com/1", Relation::kSimilar, 0.8, 0),
      Decision("http://a.com/2", Relation::kNone, 0.3, 1),
      Decision("http://a.com/3", Relation::kSimilar, 0.9, 2),
      Decision("http://a.com/4", Relation::kSequential, 1.0, 3),
      Decision("http://a.com/5", Relation::kSimilar, 0.8, 4),
      Decision("http://a.com/6", Relation::kSequential, 1.0, 5),
  };
  const PrefetchList list = AssemblePrefetchList(decisions, 10);
  std::vector<std::string> hrefs;
  for (const auto& d : list) hrefs.push_back(d.link.href);
  EXPECT_EQ(hrefs, (std::vector<std::string>{"http://a.com/4", "http://a.com/6", "http://a.com/3",
                                             "http://a.com/1", "http://a.com/5"}));
}

TEST(AssemblePrefetchListTest, DedupsAndTruncates) {
  const std::vector<PrefetchDecision> decisions = {
      Decision("http://a.com/x", Relation::kSimilar, 0.9, 0),
      Decision("HTTP://A.COM:80/x#frag", Relation::kSequential, 1.0, 1),
      Decision("http://a.com/y", Relation::kSimilar, 0.7, 2),
      Decision("http://a.com/z", Relation::kSimilar, 0.75, 3),
  };
  const PrefetchList list = AssemblePrefetchList(decisions, 10);
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[0].relation, Relation::kSequential);
  EXPECT_EQ(list[1].link.href, "http://a.com/z");
  EXPECT_EQ(AssemblePrefetchList(decisions, 2).size(), 2u);
  EXPECT_TRUE(AssemblePrefetchList(decisions, 0).empty());
}

TEST(AssemblePrefetchListTest, DefaultLimitIsFive) {
  std::vector<std::pair<std::string, std::string>> links;
  for (int i = 0; i < 8; ++i) links.push_back({"operating system", "http://o.example/" + std::to_string(i)});
  const PageSnapshot page = Page("http://books.example.com/a.html", links);
  EXPECT_EQ(EvaluatePage(page, "operating system", EngineConfig{}, DefaultResources()).size(), 5u);
}

TEST(PrefetchTest, SkipsCachedAndIsolatesFailures) {
  InMemoryFetcher origin(/*synthesize_missing=*/true);
  origin.FailOn("http://a.com/bad");
  PrefetchCache cache(8);
  cache.Insert("http://a.com/cached", "old");
  const PrefetchList list = {Decision("http://a.com/cached", Relation::kSequential, 1, 0),
                             Decision("http://a.com/bad", Relation::kSimilar, 0.9, 1),
                             Decision("http://a.com/good", Relation::kSimilar, 0.8, 2)};
  const auto outcomes = Prefetch(list, origin, cache);
  ASSERT_EQ(outcomes.size(), 3u);
  EXPECT_EQ(outcomes[0].status, PrefetchStatus::kAlreadyCached);
  EXPECT_EQ(outcomes[1].status, PrefetchStatus::kFailed);
  EXPECT_FALSE(outcomes[1].error.empty());
  EXPECT_EQ(outcomes[2].status, PrefetchStatus::kFetched);
  EXPECT_EQ(origin.fetch_count("http://a.com/cached"), 0u);
  EXPECT_TRUE(cache.Contains("http://a.com/good"));
  EXPECT_FALSE(cache.Contains("http://a.com/bad"));
  EXPECT_EQ(PrefetchStatusName(PrefetchStatus::kAlreadyCached), "cached");
}

TEST(HandleRequestTest, HitMissAndEvictedMiss) {
  InMemoryFetcher origin;
  origin.AddPage("http://a.com/1", "one");
  origin.AddPage("http://a.com/2", "two");
  PrefetchCache cache(1);
  cache.Insert("http://a.com/1", "cached one");
  RequestResult hit = HandleRequest("http://a.com/1", cache, origin);
  EXPECT_EQ(hit.outcome, CacheOutcome::kHit);
  EXPECT_EQ(hit.body, "cached one");
  EXPECT_EQ(origin.total_fetches(), 0u);
  RequestResult miss = HandleRequest("http://a.com/2", cache, origin);
  EXPECT_EQ(miss.outcome, CacheOutcome::kMiss);
  EXPECT_EQ(miss.body, "two");
  cache.Insert("http://a.com/2", "two");
  EXPECT_EQ(HandleRequest("http://a.com/1", cache, origin).outcome, CacheOutcome::kMiss);
  EXPECT_THROW(HandleRequest("http://a.com/404", cache, origin), FetchError);
}

TEST(BrowsingSessionTest, KeywordsFollowClicks) {
  InMemoryFetcher origin(true);
  BrowsingSession session(EngineConfig{}, DefaultResources(), origin);
  session.EnterKeywords("HTML tutorials");
  session.ClickedLink("HTML Introduction");
  EXPECT_EQ(session.keywords(), "HTML Introduction");
  session.ClickedLink("   ");
  EXPECT_EQ(session.keywords(), "HTML Introduction");
  session.EnterKeywords("operating system");
  EXPECT_EQ(session.keywords(), "operating system");
}

TEST(BrowsingSessionTest, DisplayPrefetchesThenRequestHits) {
  InMemoryFetcher origin(true);
  BrowsingSession session(EngineConfig{}, DefaultResources(), origin);
  session.EnterKeywords("HTML tutorials");
  const PageSnapshot page = MakeSnapshot(kHtmlPage, Slurp(kFixtures + "html_default.html"));
  std::vector<PrefetchOutcome> outcomes;
  session.OnPageDisplayed(page, &outcomes);
  ASSERT_EQ(outcomes.size(), 2u);
  EXPECT_EQ(outcomes[0].status, PrefetchStatus::kFetched);
  EXPECT_EQ(outcomes[0].url, "http://www.w3schools.com/html/html_intro.asp");
  EXPECT_EQ(session.Request("http://www.w3schools.com/html/html_intro.asp").outcome, CacheOutcome::kHit);
  EXPECT_EQ(session.Request("http://www.w3schools.com/css/default.asp").outcome, CacheOutcome::kMiss);
  // Displaying the same page again finds the link already cached.
  session.OnPageDisplayed(page, &outcomes);
  EXPECT_EQ(outcomes[0].status, PrefetchStatus::kAlreadyCached);
  EXPECT_EQ(origin.fetch_count("http://www.w3schools.com/html/html_intro.asp"), 1u);
}

TEST(BrowsingSessionTest, RejectsBadThreshold) {
  InMemoryFetcher origin;
  EngineConfig c;
  c.threshold = 2;
  EXPECT_THROW(BrowsingSession(c, DefaultResources(), origin), std::invalid_argument);
}

}  // namespace
}  // namespace semprefetch
