#ifndef SEMPREFETCH_TRACE_SIMULATOR_H_
#define SEMPREFETCH_TRACE_SIMULATOR_H_

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semprefetch/prefetch_engine.h"
#include "semprefetch/resources.h"

namespace semprefetch {

struct TraceLink {
  std::string text;
  std::string href;
};

// One displayed page: the keywords in force, the page's links, and the URL
// the user requests next.
struct TraceEvent {
  std::string keywords;
  std::string page_url;
  std::vector<TraceLink> links;
  std::string next_click;
};

struct Trace {
  std::vector<TraceEvent> events;
  // Lines that were valid JSON but not a well-formed event.
  std::size_t malformed = 0;
};

struct SimulationReport {
  std::size_t requests = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  double hit_rate = 0.0;
  std::size_t prefetched = 0;
  std::size_t used = 0;
  double precision = 0.0;
  std::size_t wasted_fetches = 0;
  std::size_t skipped_events = 0;
  std::size_t evictions = 0;

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

// JSON Lines, one event object per line with keys keywords, page_url,
// links ([{text, href}]) and next_click. Blank lines are ignored. Throws
// TraceFormatError on a line that is not JSON.
Trace ReadTrace(std::istream& in);

// False when the object lacks a field or a field has the wrong type.
bool ParseTraceEvent(const nlohmann::json& record, TraceEvent& out);
nlohmann::json TraceEventToJson(const TraceEvent& event);

// Replays the trace through one BrowsingSession backed by an instantaneous
// origin that serves every URL. The cache starts cold and persists across
// events. Events whose page_url or next_click cannot be resolved are skipped.
SimulationReport RunTrace(const Trace& trace, const EngineConfig& config, const Resources& resources);

nlohmann::json ReportToJson(const SimulationReport& report);
std::string FormatReport(const SimulationReport& report);

}  // namespace semprefetch

#endif  // SEMPREFETCH_TRACE_SIMULATOR_H_
