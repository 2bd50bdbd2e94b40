#include "semprefetch/prefetch_cache.h"

#include <deque>
#include <random>
#include <thread>

#include <gtest/gtest.h>

namespace semprefetch {
namespace {

std::string U(int i) { return "http://example.com/p" + std::to_string(i); }

TEST(PrefetchCacheTest, KPlusOneInsertsEvictOldest) {
  for (std::size_t k = 1; k <= 8; ++k) {
    PrefetchCache cache(k);
    for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(cache.Insert(U(i), "b"), std::nullopt);
    EXPECT_EQ(cache.Insert(U(k), "b"), PrefetchCache::KeyFor(U(0)));
    EXPECT_FALSE(cache.Contains(U(0)));
    for (std::size_t i = 1; i <= k; ++i) EXPECT_TRUE(cache.Contains(U(i)));
    EXPECT_EQ(cache.size(), k);
    EXPECT_EQ(cache.evictions(), 1u);
  }
}

TEST(PrefetchCacheTest, LookupRefreshesRecency) {
  PrefetchCache cache(2);
  cache.Insert(U(1), "one");
  cache.Insert(U(2), "two");
  EXPECT_EQ(cache.Lookup(U(1)), "one");
  EXPECT_EQ(cache.Insert(U(3), "three"), PrefetchCache::KeyFor(U(2)));
  EXPECT_EQ(cache.Lookup(U(2)), std::nullopt);
  EXPECT_EQ(cache.Lookup(U(1)), "one");
}

TEST(PrefetchCacheTest, ContainsDoesNotRefresh) {
  PrefetchCache cache(2);
  cache.Insert(U(1), "one");
  cache.Insert(U(2), "two");
  EXPECT_TRUE(cache.Contains(U(1)));
  EXPECT_EQ(cache.Insert(U(3), "three"), PrefetchCache::KeyFor(U(1)));
}

TEST(PrefetchCacheTest, ReinsertReplacesWithoutEviction) {
  PrefetchCache cache(2);
  cache.Insert(U(1), "old");
  cache.Insert(U(2), "two");
  EXPECT_EQ(cache.Insert(U(1), "new"), std::nullopt);
  EXPECT_EQ(cache.Lookup(U(1)), "new");
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_EQ(cache.KeysByRecency(), (std::vector<std::string>{PrefetchCache::KeyFor(U(1)), PrefetchCache::KeyFor(U(2))}));
}

TEST(PrefetchCacheTest, KeysAreNormalized) {
  PrefetchCache cache(4);
  cache.Insert("HTTP://Example.com:80/p1#frag", "x");
  EXPECT_TRUE(cache.Contains("http://example.com/p1"));
  EXPECT_EQ(cache.Lookup("http://EXAMPLE.com/./p1"), "x");
  EXPECT_EQ(PrefetchCache::KeyFor("not a url"), "not a url");
}

TEST(PrefetchCacheTest, ZeroCapacityStoresNothing) {
  PrefetchCache cache(0);
  EXPECT_EQ(cache.Insert(U(1), "x"), std::nullopt);
  EXPECT_FALSE(cache.Contains(U(1)));
  EXPECT_EQ(cache.size(), 0u);
}

// Reference LRU on a deque: front is most recent.
class OracleLru {
 public:
  explicit OracleLru(std::size_t k) : k_(k) {}
  bool Lookup(const std::string& key) {
    auto it = std::find(q_.begin(), q_.end(), key);
    if (it == q_.end()) return false;
    q_.erase(it);
    q_.push_front(key);
    return true;
  }
  std::optional<std::string> Insert(const std::string& key) {
    if (k_ == 0) return std::nullopt;
    if (Lookup(key)) return std::nullopt;
    std::optional<std::string> evicted;
    if (q_.size() == k_) {
      evicted = q_.back();
      q_.pop_back();
    }
    q_.push_front(key);
    return evicted;
  }
  std::vector<std::string> Keys() const { return {q_.begin(), q_.end()}; }

 private:
  std::size_t k_;
  std::deque<std::string> q_;
};

TEST(PrefetchCacheProperties, MatchesReferenceLru) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> cap(0, 6);
  std::uniform_int_distribution<int> key(0, 9);
  std::bernoulli_distribution insert(0.6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = cap(rng);
    PrefetchCache cache(k);
    OracleLru oracle(k);
    for (int op = 0; op < 50; ++op) {
      const std::string url = U(key(rng));
      const std::string norm = PrefetchCache::KeyFor(url);
      if (insert(rng)) {
        EXPECT_EQ(cache.Insert(url, "b"), oracle.Insert(norm));
      } else {
        EXPECT_EQ(cache.Lookup(url).has_value(), oracle.Lookup(norm));
      }
      ASSERT_EQ(cache.KeysByRecency(), oracle.Keys());
      ASSERT_LE(cache.size(), k);
    }
  }
}

TEST(PrefetchCacheTest, ConcurrentUseKeepsBound) {
  PrefetchCache cache(16);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&cache, t] {
      for (int i = 0; i < 500; ++i) {
        cache.Insert(U((t * 31 + i) % 64), "b");
        cache.Lookup(U(i % 64));
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(cache.size(), 16u);
  EXPECT_EQ(cache.KeysByRecency().size(), 16u);
}

}  // namespace
}  // namespace semprefetch
