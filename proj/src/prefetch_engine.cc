#include "semprefetch/prefetch_engine.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "semprefetch/errors.h"
#include "semprefetch/url.h"

namespace semprefetch {

void EngineConfig::Validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must be in [0, 1], got " + std::to_string(threshold));
  }
}

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kSequential: return "sequential";
    case Relation::kSimilar: return "similar";
    case Relation::kCauseEffective: return "cause_effective";
    case Relation::kImplication: return "implication";
    case Relation::kSubtype: return "subtype";
    case Relation::kInstance: return "instance";
    case Relation::kReferential: return "referential";
    case Relation::kNone: break;
  }
  return "none";
}

int RelationPriority(Relation relation) { return static_cast<int>(relation); }

std::string_view PrefetchStatusName(PrefetchStatus status) {
  switch (status) {
    case PrefetchStatus::kFetched: return "fetched";
    case PrefetchStatus::kAlreadyCached: return "cached";
    case PrefetchStatus::kFailed: break;
  }
  return "failed";
}

PrefetchDecision EvaluateLink(const AnchorLink& link, std::size_t document_index,
                              const PageSnapshot& page, std::string_view user_keywords,
                              const EngineConfig& config, const Resources& resources) {
  PrefetchDecision d;
  d.link = link;
  d.document_index = document_index;
  d.sequential = DetectSequential(Tokenize(user_keywords), Tokenize(link.anchor_text),
                                  page.parent_url, link.parent_url, resources.numbers);
  if (d.sequential.is_sequential) {
    d.relation = Relation::kSequential;
    d.score = 1.0;
    return d;
  }
  d.similar = DetectSimilar(user_keywords, link.anchor_text, resources.lexical, resources.table,
                            resources.ontology_ptr(), config.threshold);
  d.score = d.similar->probability;
  d.relation = d.similar->passes ? Relation::kSimilar : Relation::kNone;
  return d;
}

PrefetchList AssemblePrefetchList(const std::vector<PrefetchDecision>& decisions,
                                  std::size_t max_prefetch) {
  PrefetchList ranked;
  for (const auto& d : decisions) {
    if (d.relation != Relation::kNone) ranked.push_back(d);
  }
  std::sort(ranked.begin(), ranked.end(), [](const PrefetchDecision& a, const PrefetchDecision& b) {
    if (a.relation != b.relation) return RelationPriority(a.relation) < RelationPriority(b.relation);
    if (a.score != b.score) return a.score > b.score;
    return a.document_index < b.document_index;
  });

  PrefetchList list;
  std::unordered_set<std::string> seen;
  for (auto& d : ranked) {
    if (list.size() >= max_prefetch) break;
    if (!seen.insert(PrefetchCache::KeyFor(d.link.href)).second) continue;
    list.push_back(std::move(d));
  }
  return list;
}

PageEvaluation EvaluatePageDetailed(const PageSnapshot& page, std::string_view user_keywords,
                                    const EngineConfig& config, const Resources& resources) {
  PageEvaluation eval;
  for (std::size_t i = 0; i < page.links.size(); ++i) {
    const AnchorLink& link = page.links[i];
    if (link.anchor_text.empty()) continue;
    eval.decisions.push_back(EvaluateLink(link, i, page, user_keywords, config, resources));
  }
  eval.list = AssemblePrefetchList(eval.decisions, config.max_prefetch);
  return eval;
}

PrefetchList EvaluatePage(const PageSnapshot& page, std::string_view user_keywords,
                          const EngineConfig& config, const Resources& resources) {
  return EvaluatePageDetailed(page, user_keywords, config, resources).list;
}

std::vector<PrefetchOutcome> Prefetch(const PrefetchList& list, Fetcher& fetcher, PrefetchCache& cache) {
  std::vector<PrefetchOutcome> report;
  report.reserve(list.size());
  for (const auto& d : list) {
    PrefetchOutcome outcome;
    outcome.url = d.link.href;
    if (cache.Contains(d.link.href)) {
      outcome.status = PrefetchStatus::kAlreadyCached;
    } else if (FetchResult res = fetcher.Fetch(d.link.href); res.ok) {
      cache.Insert(d.link.href, std::move(res.body));
      outcome.status = PrefetchStatus::kFetched;
    } else {
      outcome.status = PrefetchStatus::kFailed;
      outcome.error = std::move(res.error);
    }
    report.push_back(std::move(outcome));
  }
  return report;
}

RequestResult HandleRequest(std::string_view url, PrefetchCache& cache, Fetcher& fetcher) {
  if (auto body = cache.Lookup(url)) return {std::move(*body), CacheOutcome::kHit};
  FetchResult res = fetcher.Fetch(std::string(url));
  if (!res.ok) throw FetchError(res.error);
  return {std::move(res.body), CacheOutcome::kMiss};
}

BrowsingSession::BrowsingSession(EngineConfig config, const Resources& resources, Fetcher& fetcher)
    : config_(config), resources_(resources), fetcher_(fetcher), cache_(config.cache_capacity) {
  config_.Validate();
}

void BrowsingSession::EnterKeywords(std::string keywords) { keywords_ = std::move(keywords); }

void BrowsingSession::ClickedLink(std::string_view anchor_text) {
  if (anchor_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return;
  keywords_ = std::string(anchor_text);
}

PageEvaluation BrowsingSession::OnPageDisplayed(const PageSnapshot& page,
                                                std::vector<PrefetchOutcome>* outcomes) {
  PageEvaluation eval = EvaluatePageDetailed(page, keywords_, config_, resources_);
  auto report = Prefetch(eval.list, fetcher_, cache_);
  if (outcomes != nullptr) *outcomes = std::move(report);
  return eval;
}

RequestResult BrowsingSession::Request(std::string_view url) {
  return HandleRequest(url, cache_, fetcher_);
}

}  // namespace semprefetch
