#include "semprefetch/url.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "semprefetch/errors.h"

namespace semprefetch {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Length of a leading "scheme:" (without the colon), or 0.
std::size_t SchemeLength(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c == ':') return i;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return 0;
  }
  return 0;
}

struct Reference {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

// RFC 3986 appendix B split.
Reference SplitReference(std::string_view s) {
  Reference r;
  if (auto n = SchemeLength(s); n > 0) {
    r.scheme = std::string(s.substr(0, n));
    s.remove_prefix(n + 1);
  }
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    r.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    r.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.starts_with("//")) {
    s.remove_prefix(2);
    const auto slash = s.find('/');
    r.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view() : s.substr(slash);
  }
  r.path = std::string(s);
  return r;
}

std::string RemoveDotSegments(std::string_view path) {
  std::vector<std::string_view> out;
  const bool absolute = path.starts_with('/');
  std::string_view rest = absolute ? path.substr(1) : path;
  bool trailing_slash = false;
  while (true) {
    const auto slash = rest.find('/');
    std::string_view seg = rest.substr(0, slash);
    const bool last = slash == std::string_view::npos;
    if (seg == ".") {
      trailing_slash = last;
    } else if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing_slash = last;
    } else {
      out.push_back(seg);
      trailing_slash = false;
    }
    if (last) break;
    rest = rest.substr(slash + 1);
  }
  std::string result = absolute ? "/" : "";
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0) result += '/';
    result += out[i];
  }
  if (trailing_slash && !result.ends_with('/')) result += '/';
  return result;
}

std::optional<Url> FromParts(const std::string& scheme, const std::string& authority,
                             std::string path, const std::optional<std::string>& query,
                             const std::optional<std::string>& fragment) {
  Url u;
  u.scheme = Lower(scheme);
  std::string_view auth = authority;
  if (auto at = auth.rfind('@'); at != std::string_view::npos) {
    u.userinfo = std::string(auth.substr(0, at));
    auth.remove_prefix(at + 1);
  }
  std::string_view host = auth;
  if (auth.starts_with('[')) {
    const auto close = auth.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    host = auth.substr(0, close + 1);
    auth.remove_prefix(close + 1);
    if (!auth.empty()) {
      if (auth[0] != ':') return std::nullopt;
      u.port = std::string(auth.substr(1));
    }
  } else if (auto colon = auth.rfind(':'); colon != std::string_view::npos) {
    host = auth.substr(0, colon);
    u.port = std::string(auth.substr(colon + 1));
  }
  if (host.empty()) return std::nullopt;
  if (!std::all_of(u.port.begin(), u.port.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  u.host = std::string(host);
  const bool bad_char = std::any_of(u.host.begin(), u.host.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '/' || c == '\\';
  });
  if (bad_char) return std::nullopt;
  u.path = std::move(path);
  u.has_query = query.has_value();
  u.query = query.value_or("");
  u.has_fragment = fragment.has_value();
  u.fragment = fragment.value_or("");
  return u;
}

std::string EncodeSpaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ' ') {
      out += "%20";
    } else if (c != '\n' && c != '\r' && c != '\t') {
      out += c;
    }
  }
  return out;
}

bool IsDefaultPort(const Url& u) {
  return (u.scheme == "http" && u.port == "80") || (u.scheme == "https" && u.port == "443") ||
         u.port.empty();
}

std::string Origin(const Url& u) {
  std::string out = u.scheme + "://" + Lower(u.host);
  if (!IsDefaultPort(u)) out += ":" + u.port;
  return out;
}

Url ParseOrThrow(std::string_view url) {
  auto parsed = ParseAbsoluteUrl(url);
  if (!parsed) throw InvalidUrl(std::string(url));
  return *std::move(parsed);
}

}  // namespace

std::string Url::ToString() const {
  std::string out = scheme + "://";
  if (!userinfo.empty()) out += userinfo + "@";
  out += host;
  if (!port.empty()) out += ":" + port;
  out += path;
  if (has_query) out += "?" + query;
  if (has_fragment) out += "#" + fragment;
  return out;
}

std::optional<Url> ParseAbsoluteUrl(std::string_view text) {
  text = TrimView(text);
  if (std::any_of(text.begin(), text.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) < 0x20;
      })) {
    return std::nullopt;
  }
  Reference r = SplitReference(text);
  if (!r.scheme || !r.authority) return std::nullopt;
  return FromParts(*r.scheme, *r.authority, r.path, r.query, r.fragment);
}

std::optional<std::string> ResolveUrl(std::string_view base_text, std::string_view ref_text) {
  auto base = ParseAbsoluteUrl(base_text);
  if (!base) return std::nullopt;
  const std::string cleaned = EncodeSpaces(TrimView(ref_text));
  Reference ref = SplitReference(cleaned);

  std::string scheme;
  std::string authority;
  std::string path;
  std::optional<std::string> query;
  if (ref.scheme) {
    if (!ref.authority) return std::nullopt;
    scheme = *ref.scheme;
    authority = *ref.authority;
    path = RemoveDotSegments(ref.path);
    query = ref.query;
  } else {
    scheme = base->scheme;
    if (ref.authority) {
      authority = *ref.authority;
      path = RemoveDotSegments(ref.path);
      query = ref.query;
    } else {
      authority = base->userinfo.empty() ? base->host : base->userinfo + "@" + base->host;
      if (!base->port.empty()) authority += ":" + base->port;
      if (ref.path.empty()) {
        path = base->path;
        query = ref.query ? ref.query : (base->has_query ? std::optional(base->query) : std::nullopt);
      } else {
        if (ref.path.starts_with('/')) {
          path = RemoveDotSegments(ref.path);
        } else if (base->path.empty()) {
          path = RemoveDotSegments("/" + ref.path);
        } else {
          const auto slash = base->path.rfind('/');
          path = RemoveDotSegments(base->path.substr(0, slash + 1) + ref.path);
        }
        query = ref.query;
      }
    }
  }
  auto url = FromParts(scheme, authority, path, query, ref.fragment);
  if (!url) return std::nullopt;
  return url->ToString();
}

std::string NormalizeUrl(std::string_view url) {
  Url u = ParseOrThrow(url);
  std::string path = RemoveDotSegments(u.path);
  if (path.empty()) path = "/";
  std::string out = Origin(u) + path;
  if (u.has_query) out += "?" + u.query;
  return out;
}

std::string ParentUrl(std::string_view url) {
  Url u = ParseOrThrow(url);
  std::string path = RemoveDotSegments(u.path);
  const auto slash = path.rfind('/');
  path = slash == std::string::npos ? std::string() : path.substr(0, slash);
  while (path.ends_with('/')) path.pop_back();
  return Origin(u) + path;
}

}  // namespace semprefetch
