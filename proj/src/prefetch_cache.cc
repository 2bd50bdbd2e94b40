#include "semprefetch/prefetch_cache.h"

#include "semprefetch/errors.h"
#include "semprefetch/url.h"

namespace semprefetch {

PrefetchCache::PrefetchCache(std::size_t capacity) : capacity_(capacity) {}

std::string PrefetchCache::KeyFor(std::string_view url) {
  try {
    return NormalizeUrl(url);
  } catch (const InvalidUrl&) {
    return std::string(url);
  }
}

std::optional<std::string> PrefetchCache::Lookup(std::string_view url) {
  const std::string key = KeyFor(url);
  std::lock_guard lock(mu_);
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  order_.splice(order_.begin(), order_, it->second);
  return it->second->body;
}

bool PrefetchCache::Contains(std::string_view url) const {
  const std::string key = KeyFor(url);
  std::lock_guard lock(mu_);
  return index_.contains(key);
}

std::optional<std::string> PrefetchCache::Insert(std::string_view url, std::string body) {
  if (capacity_ == 0) return std::nullopt;
  std::string key = KeyFor(url);
  std::lock_guard lock(mu_);
  if (auto it = index_.find(key); it != index_.end()) {
    it->second->body = std::move(body);
    order_.splice(order_.begin(), order_, it->second);
    return std::nullopt;
  }
  std::optional<std::string> evicted;
  if (order_.size() >= capacity_) {
    evicted = std::move(order_.back().key);
    index_.erase(*evicted);
    order_.pop_back();
    ++evictions_;
  }
  order_.push_front(Entry{key, std::move(body)});
  index_.emplace(std::move(key), order_.begin());
  return evicted;
}

std::size_t PrefetchCache::size() const {
  std::lock_guard lock(mu_);
  return order_.size();
}

std::size_t PrefetchCache::evictions() const {
  std::lock_guard lock(mu_);
  return evictions_;
}

std::vector<std::string> PrefetchCache::KeysByRecency() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> keys;
  keys.reserve(order_.size());
  for (const auto& e : order_) keys.push_back(e.key);
  return keys;
}

}  // namespace semprefetch
