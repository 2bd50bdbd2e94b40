#ifndef SEMPREFETCH_URL_H_
#define SEMPREFETCH_URL_H_

#include <optional>
#include <string>
#include <string_view>

namespace semprefetch {

// Hierarchical absolute URL: scheme "://" authority path [? query] [# fragment].
struct Url {
  std::string scheme;
  std::string userinfo;
  std::string host;
  std::string port;
  std::string path;
  std::string query;
  std::string fragment;
  bool has_query = false;
  bool has_fragment = false;

  std::string ToString() const;
};

// Absent unless the text is an absolute URL with a non-empty host.
std::optional<Url> ParseAbsoluteUrl(std::string_view text);

// Resolves a reference (absolute, network-path, absolute-path, relative,
// query-only or fragment-only) against an absolute base. Dot segments are
// removed. Absent when the base is not absolute or the result has no host
// (mailto:, javascript:, ...).
std::optional<std::string> ResolveUrl(std::string_view base, std::string_view ref);

// Cache/dedup key: lowercase scheme and host, default port and fragment
// dropped, dot segments removed, empty path written as "/". Throws InvalidUrl.
std::string NormalizeUrl(std::string_view url);

// The URL with query, fragment and final path segment removed, scheme and
// host lowercased, default port dropped and trailing slashes trimmed.
// "http://www.w3schools.com/html/intro.asp" -> "http://www.w3schools.com/html".
// Throws InvalidUrl.
std::string ParentUrl(std::string_view url);

}  // namespace semprefetch

#endif  // SEMPREFETCH_URL_H_
