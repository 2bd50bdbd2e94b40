#ifndef SEMPREFETCH_PREFETCH_ENGINE_H_
#define SEMPREFETCH_PREFETCH_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semprefetch/fetcher.h"
#include "semprefetch/page_model.h"
#include "semprefetch/prefetch_cache.h"
#include "semprefetch/resources.h"
#include "semprefetch/sequential_relation.h"
#include "semprefetch/similar_relation.h"

namespace semprefetch {

struct EngineConfig {
  double threshold = kDefaultThreshold;
  std::size_t max_prefetch = 5;
  std::size_t cache_capacity = 32;
  std::uint64_t successor_word_bound = 20;

  // Throws std::invalid_argument unless threshold is in [0, 1].
  void Validate() const;
};

// Relation taxonomy in priority order. Only sequential and similar are ever
// detected; the others are reserved.
enum class Relation {
  kSequential,
  kSimilar,
  kCauseEffective,
  kImplication,
  kSubtype,
  kInstance,
  kReferential,
  kNone,
};

std::string_view RelationName(Relation relation);
// Lower is fetched first; kNone ranks last.
int RelationPriority(Relation relation);

struct PrefetchDecision {
  AnchorLink link;
  std::size_t document_index = 0;
  Relation relation = Relation::kNone;
  // 1.0 for sequential links, the similar-relation probability otherwise.
  double score = 0.0;
  SequentialVerdict sequential;
  std::optional<SimilarVerdict> similar;
};

// Ordered by relation priority, then descending score, then document order.
// One entry per normalized URL.
using PrefetchList = std::vector<PrefetchDecision>;

struct PageEvaluation {
  // One decision per link with non-empty anchor text, in document order.
  std::vector<PrefetchDecision> decisions;
  PrefetchList list;
};

// Sequential first; similar only when the sequential check fails.
PrefetchDecision EvaluateLink(const AnchorLink& link, std::size_t document_index,
                              const PageSnapshot& page, std::string_view user_keywords,
                              const EngineConfig& config, const Resources& resources);

// Keeps decisions with a relation, sorts, dedups by URL, truncates to max_prefetch.
PrefetchList AssemblePrefetchList(const std::vector<PrefetchDecision>& decisions,
                                  std::size_t max_prefetch);

PageEvaluation EvaluatePageDetailed(const PageSnapshot& page, std::string_view user_keywords,
                                    const EngineConfig& config, const Resources& resources);

PrefetchList EvaluatePage(const PageSnapshot& page, std::string_view user_keywords,
                          const EngineConfig& config, const Resources& resources);

enum class PrefetchStatus { kFetched, kAlreadyCached, kFailed };

std::string_view PrefetchStatusName(PrefetchStatus status);

struct PrefetchOutcome {
  std::string url;
  PrefetchStatus status = PrefetchStatus::kFailed;
  std::string error;
};

// Fetches every uncached URL in list order and stores it. Failures are
// reported, never thrown.
std::vector<PrefetchOutcome> Prefetch(const PrefetchList& list, Fetcher& fetcher, PrefetchCache& cache);

enum class CacheOutcome { kHit, kMiss };

struct RequestResult {
  std::string body;
  CacheOutcome outcome = CacheOutcome::kMiss;
};

// Cache first, origin on a miss. Throws FetchError when a miss cannot be
// fetched.
RequestResult HandleRequest(std::string_view url, PrefetchCache& cache, Fetcher& fetcher);

// One user's browsing session: the current keywords, the prefetch cache and
// the evaluate/prefetch/request loop.
class BrowsingSession {
 public:
  BrowsingSession(EngineConfig config, const Resources& resources, Fetcher& fetcher);

  // Typed query keywords become the current keywords.
  void EnterKeywords(std::string keywords);
  // A clicked link's anchor text becomes the current keywords; an empty
  // anchor keeps the previous ones.
  void ClickedLink(std::string_view anchor_text);
  const std::string& keywords() const { return keywords_; }

  // Evaluates the displayed page against the current keywords and prefetches
  // the resulting list.
  PageEvaluation OnPageDisplayed(const PageSnapshot& page,
                                 std::vector<PrefetchOutcome>* outcomes = nullptr);
  RequestResult Request(std::string_view url);

  PrefetchCache& cache() { return cache_; }
  const EngineConfig& config() const { return config_; }

 private:
  EngineConfig config_;
  const Resources& resources_;
  Fetcher& fetcher_;
  PrefetchCache cache_;
  std::string keywords_;
};

}  // namespace semprefetch

#endif  // SEMPREFETCH_PREFETCH_ENGINE_H_
