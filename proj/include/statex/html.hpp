#ifndef STATEX_HTML_HPP
#define STATEX_HTML_HPP

#include <array>
#include <string>
#include <string_view>

#include "types.hpp"

namespace statex {

namespace detail {

inline constexpr std::array<std::string_view, 20> kBlockTags = {
    "p",  "br", "div", "li", "ul", "ol", "tr", "td",    "th",    "table",
    "h1", "h2", "h3",  "h4", "h5", "h6", "section", "article", "blockquote", "caption"};

inline std::string_view tag_name(std::string_view tag)
{
    std::size_t i = 1;
    if (i < tag.size() && tag[i] == '/') ++i;
    if (i >= tag.size() || !is_ascii_alpha(tag[i])) return {};
    std::size_t j = i;
    while (j < tag.size() && is_ascii_alnum(tag[j])) ++j;
    return tag.substr(i, j - i);
}

inline bool is_block_tag(std::string_view name)
{
    for (auto b : kBlockTags)
        if (iequals(name, b)) return true;
    return false;
}

} // namespace detail

/// Cheap sniff for HTML/XML markup at the start of a document.
inline bool looks_like_html(std::string_view text)
{
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
    std::string_view head = text.substr(i, 16);
    return detail::istarts_with(head, "<!doctype") || detail::istarts_with(head, "<html") ||
           detail::istarts_with(head, "<?xml") || detail::istarts_with(head, "<body") ||
           detail::istarts_with(head, "<p>") || detail::istarts_with(head, "<div");
}

/// Removes markup but keeps `<sup>`/`</sup>` so the normalizer can fold
/// `<sup>2</sup>`. Block-level tags become a space, inline tags vanish,
/// script/style bodies and comments are dropped. Entities are left for the
/// normalizer.
inline std::string strip_html(std::string_view html)
{
    std::string out;
    out.reserve(html.size());
    std::size_t i = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            out.push_back(html[i++]);
            continue;
        }
        if (html.substr(i, 4) == "<!--") {
            auto close = html.find("-->", i + 4);
            i = close == std::string_view::npos ? html.size() : close + 3;
            out.push_back(' ');
            continue;
        }
        auto close = html.find('>', i + 1);
        if (close == std::string_view::npos) {
            out.append(html.substr(i));
            break;
        }
        std::string_view tag = html.substr(i, close - i + 1);
        std::string_view name = detail::tag_name(tag);
        if (name.empty() && tag.size() > 1 && tag[1] != '/' && tag[1] != '!' && tag[1] != '?') {
            // a bare '<' in text, e.g. "p < .05"
            out.push_back(html[i++]);
            continue;
        }
        if (detail::iequals(name, "sup")) {
            out.append(tag[1] == '/' ? "</sup>" : "<sup>");
        } else if ((detail::iequals(name, "script") || detail::iequals(name, "style")) && tag[1] != '/') {
            std::string end = "</" + std::string(name);
            std::size_t j = close + 1;
            while (j < html.size() && !detail::istarts_with(html.substr(j), end)) ++j;
            auto gt = html.find('>', j);
            close = gt == std::string_view::npos ? html.size() - 1 : gt;
            out.push_back(' ');
        } else if (detail::is_block_tag(name)) {
            out.push_back(' ');
        }
        i = close + 1;
    }
    return out;
}

} // namespace statex

#endif
