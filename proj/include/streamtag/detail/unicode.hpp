#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>

// Minimal UTF-8 and Unicode classification helpers. Tables are generated
// from the Unicode character database by scripts/gen_unicode_tables.py.
// Malformed byte sequences decode to U+FFFD one byte at a time, so every
// input is processable without exceptions.

namespace streamtag::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

struct cp_range {
    char32_t lo, hi;
};
struct cp_pair {
    char32_t from, to;
};

namespace tables {
#include "unicode_tables.inc"
}  // namespace tables

inline bool in_ranges(const cp_range* first, const cp_range* last, char32_t cp) {
    auto it = std::upper_bound(first, last, cp, [](char32_t c, const cp_range& r) {
        return c < r.lo;
    });
    return it != first && cp <= std::prev(it)->hi;
}

inline bool is_punct(char32_t cp) {
    return in_ranges(std::begin(tables::kPunctRanges),
                     std::end(tables::kPunctRanges), cp);
}

inline bool is_space(char32_t cp) {
    return in_ranges(std::begin(tables::kSpaceRanges),
                     std::end(tables::kSpaceRanges), cp);
}

inline char32_t to_lower(char32_t cp) {
    auto first = std::begin(tables::kLowerMap);
    auto last = std::end(tables::kLowerMap);
    auto it = std::lower_bound(first, last, cp, [](const cp_pair& p, char32_t c) {
        return p.from < c;
    });
    return (it != last && it->from == cp) ? it->to : cp;
}

// Decodes the codepoint starting at byte offset i; writes its byte length
// to `len`. Overlong encodings, surrogates and stray bytes yield U+FFFD
// with len 1.
inline char32_t decode(std::string_view s, std::size_t i, std::size_t& len) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        len = 1;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    auto cb = [&](std::size_t k) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = ((b0 & 0x1Fu) << 6) | cb(1);
        if (cp >= 0x80) {
            len = 2;
            return cp;
        }
    } else if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = ((b0 & 0x0Fu) << 12) | (cb(1) << 6) | cb(2);
        if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) {
            len = 3;
            return cp;
        }
    } else if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = ((b0 & 0x07u) << 18) | (cb(1) << 12) | (cb(2) << 6) | cb(3);
        if (cp >= 0x10000 && cp <= 0x10FFFF) {
            len = 4;
            return cp;
        }
    }
    len = 1;
    return kReplacement;
}

inline void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Number of Unicode scalar values in a (possibly malformed) UTF-8 string.
inline std::size_t length(std::string_view s) {
    std::size_t n = 0, i = 0, len = 0;
    while (i < s.size()) {
        decode(s, i, len);
        i += len;
        ++n;
    }
    return n;
}

}  // namespace streamtag::unicode
