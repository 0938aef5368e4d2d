#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "streamtag/types.hpp"

namespace streamtag {

inline constexpr std::size_t kDefaultMaxTextBytes = 560;

// Parses one JSON Lines corpus record: {"id": str, "timestamp": int, "text":
// str}. Unknown fields are ignored. On failure returns nullopt and describes
// the problem in `error`; the caller counts and skips.
std::optional<Post> parse_corpus_line(
    std::string_view line, std::string& error,
    std::size_t max_text_bytes = kDefaultMaxTextBytes);

// Sequential reader over a JSON Lines corpus. Malformed lines are counted
// and skipped; blank lines are ignored.
class CorpusReader {
public:
    explicit CorpusReader(std::istream& in,
                          std::size_t max_text_bytes = kDefaultMaxTextBytes)
        : in_(in), max_text_bytes_(max_text_bytes) {}

    // Next well-formed post, or nullopt at end of stream.
    std::optional<Post> next();

    std::size_t parse_errors() const { return parse_errors_; }
    std::size_t lines_read() const { return line_number_; }
    const std::string& last_error() const { return last_error_; }

private:
    std::istream& in_;
    std::size_t max_text_bytes_;
    std::size_t line_number_ = 0;
    std::size_t parse_errors_ = 0;
    std::string last_error_;
    std::string buffer_;
};

}  // namespace streamtag
