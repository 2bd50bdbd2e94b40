#include "semprefetch/page_model.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <unordered_map>

#include "semprefetch/url.h"

namespace semprefetch {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

const std::unordered_map<std::string_view, char32_t>& NamedEntities() {
  static const std::unordered_map<std::string_view, char32_t> kEntities = {
      {"amp", U'&'},       {"lt", U'<'},        {"gt", U'>'},        {"quot", U'"'},
      {"apos", U'\''},     {"nbsp", U' '},      {"copy", U'©'}, {"reg", U'®'},
      {"raquo", U'»'}, {"laquo", U'«'}, {"rsaquo", U'›'}, {"lsaquo", U'‹'},
      {"hellip", U'…'}, {"mdash", U'—'}, {"ndash", U'–'}, {"rarr", U'→'},
      {"larr", U'←'}, {"middot", U'·'}, {"bull", U'•'}};
  return kEntities;
}

// Whitespace runs become one space; leading and trailing whitespace is dropped.
std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

struct Tag {
  std::string name;  // lowercase, without '/'
  bool closing = false;
  std::unordered_map<std::string, std::string> attrs;
};

// Parses the tag starting at html[pos] == '<'. Returns the position just past
// '>' (or the end of input for an unterminated tag).
std::size_t ParseTag(std::string_view html, std::size_t pos, Tag& tag) {
  std::size_t i = pos + 1;
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < html.size() && !IsSpace(html[i]) && html[i] != '>' && html[i] != '/') ++i;
  tag.name = Lower(html.substr(name_start, i - name_start));

  while (i < html.size() && html[i] != '>') {
    if (IsSpace(html[i]) || html[i] == '/') {
      ++i;
      continue;
    }
    const std::size_t key_start = i;
    while (i < html.size() && !IsSpace(html[i]) && html[i] != '=' && html[i] != '>') ++i;
    std::string key = Lower(html.substr(key_start, i - key_start));
    while (i < html.size() && IsSpace(html[i])) ++i;
    std::string value;
    if (i < html.size() && html[i] == '=') {
      ++i;
      while (i < html.size() && IsSpace(html[i])) ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        const char quote = html[i++];
        const std::size_t close = html.find(quote, i);
        const std::size_t end = close == std::string_view::npos ? html.size() : close;
        value = std::string(html.substr(i, end - i));
        i = close == std::string_view::npos ? html.size() : close + 1;
      } else {
        const std::size_t v_start = i;
        while (i < html.size() && !IsSpace(html[i]) && html[i] != '>') ++i;
        value = std::string(html.substr(v_start, i - v_start));
      }
    }
    if (!key.empty()) tag.attrs.emplace(std::move(key), DecodeEntities(value));
  }
  return i < html.size() ? i + 1 : html.size();
}

bool IsBlockBreak(std::string_view name) {
  return name == "br" || name == "p" || name == "div" || name == "li" || name == "td" ||
         name == "tr" || name == "h1" || name == "h2" || name == "h3" || name == "h4" ||
         name == "h5" || name == "h6";
}

struct OpenAnchor {
  std::string href;
  std::string text;
  std::string img_alt;
};

}  // namespace

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out += text[i++];
      continue;
    }
    const std::size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += text[i++];
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (name.size() > 1 && name[0] == '#') {
      std::uint32_t value = 0;
      std::string_view digits = name.substr(1);
      int base = 10;
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        base = 16;
        digits.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
      if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) cp = value;
    } else if (auto it = NamedEntities().find(name); it != NamedEntities().end()) {
      cp = it->second;
    }
    if (!cp) {
      out += text[i++];
      continue;
    }
    AppendUtf8(out, *cp);
    i = semi + 1;
  }
  return out;
}

std::vector<AnchorLink> ExtractAnchors(std::string_view html, std::string_view base_url) {
  std::vector<AnchorLink> links;
  std::string base(base_url);
  std::optional<OpenAnchor> open;

  auto finish = [&]() {
    if (!open) return;
    std::string text = CollapseWhitespace(DecodeEntities(open->text));
    if (text.empty()) text = CollapseWhitespace(open->img_alt);
    auto href = ResolveUrl(base, open->href);
    open.reset();
    if (!href) return;
    AnchorLink link;
    link.anchor_text = std::move(text);
    link.parent_url = ParentUrl(*href);
    link.href = std::move(*href);
    links.push_back(std::move(link));
  };

  std::size_t i = 0;
  while (i < html.size()) {
    const std::size_t lt = html.find('<', i);
    if (open) open->text.append(html.substr(i, (lt == std::string_view::npos ? html.size() : lt) - i));
    if (lt == std::string_view::npos) break;

    if (html.substr(lt).starts_with("<!--")) {
      const std::size_t end = html.find("-->", lt + 4);
      i = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    // A '<' that cannot start a tag is text.
    if (lt + 1 >= html.size() ||
        !(std::isalpha(static_cast<unsigned char>(html[lt + 1])) || html[lt + 1] == '/' ||
          html[lt + 1] == '!')) {
      if (open) open->text += '<';
      i = lt + 1;
      continue;
    }

    Tag tag;
    i = ParseTag(html, lt, tag);

    if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
      const std::string close = "</" + tag.name;
      std::size_t j = i;
      while (j < html.size()) {
        const std::size_t cand = html.find("</", j);
        if (cand == std::string_view::npos) {
          j = html.size();
          break;
        }
        if (Lower(html.substr(cand, close.size())) == close) {
          j = cand;
          break;
        }
        j = cand + 2;
      }
      i = j;
      continue;
    }

    if (tag.name == "base" && !tag.closing) {
      if (auto it = tag.attrs.find("href"); it != tag.attrs.end()) {
        if (auto resolved = ResolveUrl(base, it->second)) base = *resolved;
      }
    } else if (tag.name == "a") {
      // Anchors do not nest; a new <a> closes the previous one.
      finish();
      if (!tag.closing) {
        auto it = tag.attrs.find("href");
        if (it != tag.attrs.end()) {
          std::string_view href = it->second;
          while (!href.empty() && IsSpace(href.front())) href.remove_prefix(1);
          if (!href.empty() && href.front() != '#') open = OpenAnchor{std::string(href), {}, {}};
        }
      }
    } else if (open && tag.name == "img" && !tag.closing) {
      if (auto it = tag.attrs.find("alt"); it != tag.attrs.end()) {
        if (!open->img_alt.empty()) open->img_alt += ' ';
        open->img_alt += it->second;
      }
    } else if (open && IsBlockBreak(tag.name)) {
      open->text += ' ';
    }
  }
  finish();
  return links;
}

PageSnapshot MakeSnapshot(std::string url, std::string body) {
  PageSnapshot page;
  page.parent_url = ParentUrl(url);
  page.links = ExtractAnchors(body, url);
  page.url = std::move(url);
  page.body = std::move(body);
  return page;
}

}  // namespace semprefetch
