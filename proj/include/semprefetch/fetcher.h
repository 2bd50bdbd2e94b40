#ifndef SEMPREFETCH_FETCHER_H_
#define SEMPREFETCH_FETCHER_H_

#include <chrono>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>

namespace semprefetch {

struct FetchResult {
  bool ok = false;
  std::string body;
  std::string error;
};

class Fetcher {
 public:
  virtual ~Fetcher() = default;
  // `url` is absolute. Must be safe to call concurrently.
  virtual FetchResult Fetch(const std::string& url) = 0;
};

// Deterministic origin for tests and the simulator. Serves registered pages;
// with synthesize_missing, any absolute URL gets a generated body.
class InMemoryFetcher : public Fetcher {
 public:
  explicit InMemoryFetcher(bool synthesize_missing = false)
      : synthesize_missing_(synthesize_missing) {}

  void AddPage(const std::string& url, std::string body);
  void FailOn(const std::string& url);

  FetchResult Fetch(const std::string& url) override;

  std::size_t fetch_count(const std::string& url) const;
  std::size_t total_fetches() const;

 private:
  bool synthesize_missing_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> pages_;
  std::map<std::string, bool> failing_;
  std::map<std::string, std::size_t> counts_;
  std::size_t total_ = 0;
};

// Plain HTTP(S) GET that follows redirects. Non-2xx responses are failures.
class HttpFetcher : public Fetcher {
 public:
  explicit HttpFetcher(std::chrono::milliseconds timeout = std::chrono::seconds(10))
      : timeout_(timeout) {}

  FetchResult Fetch(const std::string& url) override;

 private:
  std::chrono::milliseconds timeout_;
};

}  // namespace semprefetch

#endif  // SEMPREFETCH_FETCHER_H_
