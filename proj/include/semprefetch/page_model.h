#ifndef SEMPREFETCH_PAGE_MODEL_H_
#define SEMPREFETCH_PAGE_MODEL_H_

#include <string>
#include <string_view>
#include <vector>

namespace semprefetch {

struct AnchorLink {
  std::string anchor_text;
  // Absolute, with scheme and host.
  std::string href;
  std::string parent_url;

  friend bool operator==(const AnchorLink&, const AnchorLink&) = default;
};

struct PageSnapshot {
  std::string url;
  std::string parent_url;
  // Document order.
  std::vector<AnchorLink> links;
  std::string body;
};

// Replaces character references (&amp;, &gt;, &#62;, &#x3E;, ...) with
// UTF-8. Unknown or unterminated references are left as written.
std::string DecodeEntities(std::string_view text);

// Best-effort scan of <a href> elements. Anchor text is the visible text with
// tags stripped, entities decoded and whitespace collapsed; an <img alt>
// stands in when there is no text. Hrefs resolve against a <base href> when
// present, else against base_url. Empty and fragment-only hrefs, and targets
// without a host, are skipped. Never throws on malformed markup.
std::vector<AnchorLink> ExtractAnchors(std::string_view html, std::string_view base_url);

// Throws InvalidUrl when url is not absolute.
PageSnapshot MakeSnapshot(std::string url, std::string body);

}  // namespace semprefetch

#endif  // SEMPREFETCH_PAGE_MODEL_H_
