#ifndef SEMPREFETCH_PREFETCH_CACHE_H_
#define SEMPREFETCH_PREFETCH_CACHE_H_

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semprefetch {

// LRU store of prefetched pages keyed by normalized URL. Lookups and inserts
// both count as use. All members are safe to call from several threads.
class PrefetchCache {
 public:
  explicit PrefetchCache(std::size_t capacity);

  PrefetchCache(const PrefetchCache&) = delete;
  PrefetchCache& operator=(const PrefetchCache&) = delete;

  // Returns the stored body and marks the entry most recently used.
  std::optional<std::string> Lookup(std::string_view url);
  // Membership test that leaves recency untouched.
  bool Contains(std::string_view url) const;
  // Inserts or replaces. Returns the key evicted to make room, if any. With
  // capacity 0 nothing is stored.
  std::optional<std::string> Insert(std::string_view url, std::string body);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  std::size_t evictions() const;
  // Keys from most to least recently used.
  std::vector<std::string> KeysByRecency() const;

  // The key a URL is stored under; non-URLs are used verbatim.
  static std::string KeyFor(std::string_view url);

 private:
  struct Entry {
    std::string key;
    std::string body;
  };

  const std::size_t capacity_;
  mutable std::mutex mu_;
  std::list<Entry> order_;  // front = most recent
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
  std::size_t evictions_ = 0;
};

}  // namespace semprefetch

#endif  // SEMPREFETCH_PREFETCH_CACHE_H_
