#include "semprefetch/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "semprefetch/errors.h"
#include "semprefetch/fetcher.h"
#include "semprefetch/prefetch_engine.h"
#include "semprefetch/resources.h"
#include "semprefetch/similar_relation.h"
#include "semprefetch/trace_simulator.h"
#include "semprefetch/url.h"

namespace semprefetch {
namespace {

using nlohmann::json;

std::string FormatScore(double score) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << score;
  return s.str();
}

std::string JoinLemmas(const TokenList& tokens) {
  std::string out = "[";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ", ";
    out += tokens[i].lemma;
  }
  return out + "]";
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

struct CommonOptions {
  double threshold = kDefaultThreshold;
  std::size_t max_prefetch = 5;
  std::size_t cache_capacity = 32;
  std::uint64_t successor_bound = 20;
  std::string format = "table";
  std::string stopwords;
  std::string lemmas;
  std::string simtable;
  std::string ontology;
  std::string numbers;

  EngineConfig Config() const {
    EngineConfig c;
    c.threshold = threshold;
    c.max_prefetch = max_prefetch;
    c.cache_capacity = cache_capacity;
    c.successor_word_bound = successor_bound;
    return c;
  }

  ResourcePaths Paths() const {
    ResourcePaths p;
    if (!stopwords.empty()) p.stopwords = stopwords;
    if (!lemmas.empty()) p.lemmas = lemmas;
    if (!simtable.empty()) p.simtable = simtable;
    if (!ontology.empty()) p.ontology = ontology;
    if (!numbers.empty()) p.numbers = numbers;
    return p;
  }
};

struct AnalyzeOptions {
  std::string source;
  std::string keywords;
  std::string base_url;
  bool fetch = false;
  double timeout_s = 10.0;
};

struct SimilarityOptions {
  std::string a;
  std::string b;
};

struct SimulateOptions {
  std::string trace;
};

bool IsRemote(const std::string& source) {
  return source.starts_with("http://") || source.starts_with("https://");
}

json DecisionJson(const PrefetchDecision& d, std::optional<std::size_t> rank) {
  json j = {{"anchor_text", d.link.anchor_text},
            {"href", d.link.href},
            {"parent_url", d.link.parent_url},
            {"relation", RelationName(d.relation)},
            {"reason", ReasonName(d.sequential.reason)},
            {"score", d.score},
            {"prefetch", rank.has_value()},
            {"rank", rank ? json(*rank) : json(nullptr)}};
  return j;
}

int RunAnalyze(const AnalyzeOptions& opt, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
  std::string body;
  std::string page_url;
  if (IsRemote(opt.source)) {
    HttpFetcher fetcher(std::chrono::milliseconds(static_cast<long>(opt.timeout_s * 1000)));
    FetchResult res = fetcher.Fetch(opt.source);
    if (!res.ok) {
      err << "error: " << res.error << "\n";
      return kExitIo;
    }
    body = std::move(res.body);
    page_url = opt.base_url.empty() ? opt.source : opt.base_url;
  } else {
    std::ifstream in(opt.source, std::ios::binary);
    if (!in) {
      err << "error: cannot read page " << opt.source << "\n";
      return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
    page_url = opt.base_url.empty()
                   ? "http://localhost/" + std::filesystem::path(opt.source).filename().string()
                   : opt.base_url;
  }
  if (!ParseAbsoluteUrl(page_url)) {
    err << "error: page url is not absolute: " << page_url << "\n";
    return kExitUsage;
  }

  const Resources resources = LoadResources(common.Paths(), common.successor_bound);
  const EngineConfig config = common.Config();
  const PageSnapshot page = MakeSnapshot(page_url, std::move(body));
  const PageEvaluation eval = EvaluatePageDetailed(page, opt.keywords, config, resources);

  // Listed links first, then the rest in document order.
  std::vector<std::pair<const PrefetchDecision*, std::optional<std::size_t>>> rows;
  std::vector<std::size_t> listed;
  for (std::size_t i = 0; i < eval.list.size(); ++i) {
    rows.emplace_back(&eval.list[i], i + 1);
    listed.push_back(eval.list[i].document_index);
  }
  for (const auto& d : eval.decisions) {
    if (std::find(listed.begin(), listed.end(), d.document_index) == listed.end()) {
      rows.emplace_back(&d, std::nullopt);
    }
  }

  std::vector<PrefetchOutcome> outcomes;
  if (opt.fetch) {
    HttpFetcher fetcher(std::chrono::milliseconds(static_cast<long>(opt.timeout_s * 1000)));
    PrefetchCache cache(config.cache_capacity);
    outcomes = Prefetch(eval.list, fetcher, cache);
  }

  if (common.format == "json") {
    json links = json::array();
    for (const auto& [d, rank] : rows) links.push_back(DecisionJson(*d, rank));
    json doc = {{"page_url", page.url},
                {"parent_url", page.parent_url},
                {"keywords", opt.keywords},
                {"threshold", config.threshold},
                {"max_prefetch", config.max_prefetch},
                {"links", std::move(links)}};
    if (opt.fetch) {
      json fetched = json::array();
      for (const auto& o : outcomes) {
        fetched.push_back({{"url", o.url}, {"status", PrefetchStatusName(o.status)}, {"error", o.error}});
      }
      doc["fetch_report"] = std::move(fetched);
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "page      " << page.url << "\n"
      << "parent    " << page.parent_url << "\n"
      << "keywords  " << opt.keywords << "\n"
      << "threshold " << FormatScore(config.threshold) << "\n\n";
  out << Pad("rank", 6) << Pad("relation", 12) << Pad("score", 8) << Pad("prefetch", 10)
      << Pad("anchor text", 40) << "href\n";
  for (const auto& [d, rank] : rows) {
    out << Pad(rank ? std::to_string(*rank) : "-", 6) << Pad(std::string(RelationName(d->relation)), 12)
        << Pad(FormatScore(d->score), 8) << Pad(rank ? "yes" : "no", 10)
        << Pad(d->link.anchor_text, 40) << d->link.href << "\n";
  }
  if (opt.fetch) {
    out << "\n";
    for (const auto& o : outcomes) {
      out << Pad(std::string(PrefetchStatusName(o.status)), 8) << o.url;
      if (!o.error.empty()) out << "  (" << o.error << ")";
      out << "\n";
    }
  }
  return kExitOk;
}

int RunSimilarity(const SimilarityOptions& opt, const CommonOptions& common, std::ostream& out) {
  const Resources resources = LoadResources(common.Paths(), common.successor_bound);
  const SimilarAnalysis a = AnalyzeSimilar(opt.a, opt.b, resources.lexical, resources.table,
                                           resources.ontology_ptr(), common.threshold);
  const SimilarityMatrix& m = a.matrix;

  if (common.format == "json") {
    json matrix = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
      matrix.push_back(std::move(row));
    }
    json doc = {{"user_tokens", a.user_tokens.Lemmas()},
                {"anchor_tokens", a.anchor_tokens.Lemmas()},
                {"matrix", std::move(matrix)},
                {"row_maxima", a.verdict.row_maxima},
                {"total", a.verdict.total},
                {"divisor", a.verdict.divisor},
                {"probability", a.verdict.probability},
                {"threshold", common.threshold},
                {"passes", a.verdict.passes}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::size_t label_width = 8;
  for (const auto& l : m.row_labels()) label_width = std::max(label_width, l.size() + 2);
  std::vector<std::size_t> widths;
  for (const auto& l : m.col_labels()) widths.push_back(std::max<std::size_t>(l.size(), 6) + 2);

  out << "user tokens    " << JoinLemmas(a.user_tokens) << "\n"
      << "anchor tokens  " << JoinLemmas(a.anchor_tokens) << "\n\n";
  out << Pad("", label_width);
  for (std::size_t c = 0; c < m.cols(); ++c) out << Pad(m.col_labels()[c], widths[c]);
  out << "MAX\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << Pad(m.row_labels()[r], label_width);
    for (std::size_t c = 0; c < m.cols(); ++c) out << Pad(FormatScore(m.at(r, c)), widths[c]);
    out << FormatScore(a.verdict.row_maxima[r]) << "\n";
  }
  out << "\nTOTAL        " << FormatScore(a.verdict.total) << "\n"
      << "divisor      " << a.verdict.divisor << "\n"
      << "probability  " << FormatScore(a.verdict.probability) << "\n"
      << "threshold    " << FormatScore(common.threshold) << "\n"
      << "result       " << (a.verdict.passes ? "pass" : "fail") << "\n";
  return kExitOk;
}

int RunSimulate(const SimulateOptions& opt, const CommonOptions& common, std::ostream& out,
                std::ostream& err) {
  std::ifstream in(opt.trace);
  if (!in) {
    err << "error: cannot read trace " << opt.trace << "\n";
    return kExitIo;
  }
  Trace trace;
  try {
    trace = ReadTrace(in);
  } catch (const TraceFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  const Resources resources = LoadResources(common.Paths(), common.successor_bound);
  const SimulationReport report = RunTrace(trace, common.Config(), resources);
  if (trace.malformed > 0) err << "warning: skipped " << trace.malformed << " malformed trace events\n";
  if (common.format == "json") {
    out << ReportToJson(report).dump(2) << "\n";
  } else {
    out << FormatReport(report);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Client-side semantic web prefetching", "semprefetch"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--threshold", common.threshold, "Similar-relation prefetch threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("SEMPREFETCH_THRESHOLD")
      ->capture_default_str();
  app.add_option("--max-prefetch", common.max_prefetch, "Prefetch list length limit")
      ->envname("SEMPREFETCH_MAX_PREFETCH")
      ->capture_default_str();
  app.add_option("--cache-capacity", common.cache_capacity, "Prefetch cache entries")
      ->envname("SEMPREFETCH_CACHE_CAPACITY")
      ->capture_default_str();
  app.add_option("--successor-bound", common.successor_bound, "Largest number word recognised")
      ->envname("SEMPREFETCH_SUCCESSOR_BOUND")
      ->capture_default_str();
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("SEMPREFETCH_FORMAT")
      ->capture_default_str();
  app.add_option("--stopwords", common.stopwords, "Stop-word file")->envname("SEMPREFETCH_STOPWORDS");
  app.add_option("--lemmas", common.lemmas, "Lemma map TSV")->envname("SEMPREFETCH_LEMMAS");
  app.add_option("--simtable", common.simtable, "Word similarity TSV")->envname("SEMPREFETCH_SIMTABLE");
  app.add_option("--ontology", common.ontology, "Ontology TSV, or 'none'")->envname("SEMPREFETCH_ONTOLOGY");
  app.add_option("--numbers", common.numbers, "Number-word TSV")->envname("SEMPREFETCH_NUMBERS");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Score a page's links against keywords");
  analyze_cmd->add_option("source", analyze.source, "HTML file or http(s) URL")->required();
  analyze_cmd->add_option("-k,--keywords", analyze.keywords, "User keywords")
      ->required()
      ->envname("SEMPREFETCH_KEYWORDS");
  analyze_cmd->add_option("--base-url", analyze.base_url, "URL of the page when read from a file");
  analyze_cmd->add_flag("--fetch", analyze.fetch, "Prefetch the resulting list over HTTP");
  analyze_cmd->add_option("--timeout", analyze.timeout_s, "HTTP timeout in seconds")
      ->envname("SEMPREFETCH_TIMEOUT")
      ->capture_default_str();

  SimilarityOptions similarity;
  auto* similarity_cmd = app.add_subcommand("similarity", "Show the similarity matrix for two phrases");
  similarity_cmd->add_option("a", similarity.a, "User keywords")->required();
  similarity_cmd->add_option("b", similarity.b, "Anchor text")->required();

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Replay a browsing trace");
  simulate_cmd->add_option("trace", simulate.trace, "Trace file (JSON Lines)")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("semprefetch");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return RunAnalyze(analyze, common, out, err);
    if (*similarity_cmd) return RunSimilarity(similarity, common, out);
    if (*simulate_cmd) return RunSimulate(simulate, common, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidUrl& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace semprefetch
