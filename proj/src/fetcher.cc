#include "semprefetch/fetcher.h"

#include <httplib.h>

#include "semprefetch/errors.h"
#include "semprefetch/url.h"

namespace semprefetch {
namespace {

std::string KeyOf(const std::string& url) {
  try {
    return NormalizeUrl(url);
  } catch (const InvalidUrl&) {
    return url;
  }
}

}  // namespace

void InMemoryFetcher::AddPage(const std::string& url, std::string body) {
  std::lock_guard lock(mu_);
  pages_[KeyOf(url)] = std::move(body);
}

void InMemoryFetcher::FailOn(const std::string& url) {
  std::lock_guard lock(mu_);
  failing_[KeyOf(url)] = true;
}

FetchResult InMemoryFetcher::Fetch(const std::string& url) {
  const std::string key = KeyOf(url);
  std::lock_guard lock(mu_);
  ++counts_[key];
  ++total_;
  if (failing_.contains(key)) return {false, {}, "simulated failure for " + key};
  if (auto it = pages_.find(key); it != pages_.end()) return {true, it->second, {}};
  if (synthesize_missing_ && ParseAbsoluteUrl(url)) {
    return {true, "<html><head><title>" + key + "</title></head><body></body></html>", {}};
  }
  return {false, {}, "no such page: " + key};
}

std::size_t InMemoryFetcher::fetch_count(const std::string& url) const {
  std::lock_guard lock(mu_);
  auto it = counts_.find(KeyOf(url));
  return it == counts_.end() ? 0 : it->second;
}

std::size_t InMemoryFetcher::total_fetches() const {
  std::lock_guard lock(mu_);
  return total_;
}

FetchResult HttpFetcher::Fetch(const std::string& url) {
  auto parsed = ParseAbsoluteUrl(url);
  if (!parsed) return {false, {}, "invalid url: " + url};
  if (parsed->scheme != "http" && parsed->scheme != "https") {
    return {false, {}, "unsupported scheme: " + parsed->scheme};
  }
  std::string origin = parsed->scheme + "://" + parsed->host;
  if (!parsed->port.empty()) origin += ":" + parsed->port;
  std::string target = parsed->path.empty() ? "/" : parsed->path;
  if (parsed->has_query) target += "?" + parsed->query;

  httplib::Client client(origin);
  if (!client.is_valid()) return {false, {}, "cannot create client for " + origin};
  client.set_follow_location(true);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);

  auto res = client.Get(target);
  if (!res) return {false, {}, "request to " + url + " failed: " + httplib::to_string(res.error())};
  if (res->status < 200 || res->status >= 300) {
    return {false, {}, "GET " + url + " returned HTTP " + std::to_string(res->status)};
  }
  return {true, std::move(res->body), {}};
}

}  // namespace semprefetch
