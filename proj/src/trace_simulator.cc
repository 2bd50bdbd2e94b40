#include "semprefetch/trace_simulator.h"

#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "semprefetch/errors.h"
#include "semprefetch/url.h"

namespace semprefetch {
namespace {

using nlohmann::json;

bool GetString(const json& obj, const char* key, std::string& out) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return false;
  out = it->get<std::string>();
  return true;
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

bool ParseTraceEvent(const json& record, TraceEvent& out) {
  if (!record.is_object()) return false;
  TraceEvent ev;
  if (!GetString(record, "keywords", ev.keywords) || !GetString(record, "page_url", ev.page_url) ||
      !GetString(record, "next_click", ev.next_click)) {
    return false;
  }
  auto links = record.find("links");
  if (links == record.end() || !links->is_array()) return false;
  for (const auto& l : *links) {
    if (!l.is_object()) return false;
    TraceLink link;
    if (!GetString(l, "text", link.text) || !GetString(l, "href", link.href)) return false;
    ev.links.push_back(std::move(link));
  }
  out = std::move(ev);
  return true;
}

json TraceEventToJson(const TraceEvent& event) {
  json links = json::array();
  for (const auto& l : event.links) links.push_back({{"text", l.text}, {"href", l.href}});
  return {{"keywords", event.keywords},
          {"page_url", event.page_url},
          {"links", std::move(links)},
          {"next_click", event.next_click}};
}

Trace ReadTrace(std::istream& in) {
  Trace trace;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw TraceFormatError("trace line " + std::to_string(lineno) + ": " + e.what());
    }
    TraceEvent ev;
    if (ParseTraceEvent(record, ev)) {
      trace.events.push_back(std::move(ev));
    } else {
      ++trace.malformed;
    }
  }
  return trace;
}

SimulationReport RunTrace(const Trace& trace, const EngineConfig& config, const Resources& resources) {
  SimulationReport report;
  report.skipped_events = trace.malformed;

  InMemoryFetcher origin(/*synthesize_missing=*/true);
  BrowsingSession session(config, resources, origin);
  // Prefetched pages not yet requested.
  std::unordered_set<std::string> outstanding;

  for (const auto& ev : trace.events) {
    if (!ParseAbsoluteUrl(ev.page_url)) {
      ++report.skipped_events;
      continue;
    }
    auto next = ResolveUrl(ev.page_url, ev.next_click);
    if (!next) {
      ++report.skipped_events;
      continue;
    }

    PageSnapshot page;
    page.url = ev.page_url;
    page.parent_url = ParentUrl(ev.page_url);
    for (const auto& l : ev.links) {
      auto href = ResolveUrl(ev.page_url, l.href);
      if (!href) continue;
      page.links.push_back(AnchorLink{l.text, *href, ParentUrl(*href)});
    }

    session.EnterKeywords(ev.keywords);
    std::vector<PrefetchOutcome> outcomes;
    session.OnPageDisplayed(page, &outcomes);
    for (const auto& o : outcomes) {
      if (o.status != PrefetchStatus::kFetched) continue;
      ++report.prefetched;
      outstanding.insert(PrefetchCache::KeyFor(o.url));
    }

    ++report.requests;
    RequestResult res = session.Request(*next);
    if (res.outcome == CacheOutcome::kHit) {
      ++report.hits;
      if (outstanding.erase(PrefetchCache::KeyFor(*next)) > 0) ++report.used;
    } else {
      ++report.misses;
    }
  }

  report.hit_rate = Ratio(report.hits, report.requests);
  report.precision = Ratio(report.used, report.prefetched);
  report.wasted_fetches = report.prefetched - report.used;
  report.evictions = session.cache().evictions();
  return report;
}

json ReportToJson(const SimulationReport& r) {
  return {{"requests", r.requests},   {"hits", r.hits},
          {"misses", r.misses},       {"hit_rate", r.hit_rate},
          {"prefetched", r.prefetched}, {"used", r.used},
          {"precision", r.precision}, {"wasted_fetches", r.wasted_fetches},
          {"skipped_events", r.skipped_events}, {"evictions", r.evictions}};
}

std::string FormatReport(const SimulationReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "requests        " << r.requests << "\n"
      << "hits            " << r.hits << "\n"
      << "misses          " << r.misses << "\n"
      << "hit rate        " << r.hit_rate << "\n"
      << "prefetched      " << r.prefetched << "\n"
      << "used            " << r.used << "\n"
      << "precision       " << r.precision << "\n"
      << "wasted fetches  " << r.wasted_fetches << "\n"
      << "skipped events  " << r.skipped_events << "\n"
      << "evictions       " << r.evictions << "\n";
  return out.str();
}

}  // namespace semprefetch
