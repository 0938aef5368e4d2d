#include "streamtag/corpus.hpp"

#include <json.hpp>

namespace streamtag {

std::optional<Post> parse_corpus_line(std::string_view line, std::string& error,
                                      std::size_t max_text_bytes) {
    error.clear();
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        error = "malformed JSON";
        return std::nullopt;
    }
    auto id = doc.find("id");
    if (id == doc.end() || !id->is_string()) {
        error = "missing or non-string \"id\"";
        return std::nullopt;
    }
    auto ts = doc.find("timestamp");
    if (ts == doc.end() || !ts->is_number_integer()) {
        error = "missing or non-integer \"timestamp\"";
        return std::nullopt;
    }
    auto text = doc.find("text");
    if (text == doc.end() || !text->is_string()) {
        error = "missing or non-string \"text\"";
        return std::nullopt;
    }

    Post post;
    post.id = id->get<std::string>();
    post.timestamp = ts->get<std::int64_t>();
    post.text = text->get<std::string>();
    if (post.id.empty()) {
        error = "empty \"id\"";
        return std::nullopt;
    }
    if (post.timestamp < 0) {
        error = "negative \"timestamp\"";
        return std::nullopt;
    }
    if (post.text.size() > max_text_bytes) {
        error = "\"text\" exceeds " + std::to_string(max_text_bytes) + " bytes";
        return std::nullopt;
    }
    return post;
}

std::optional<Post> CorpusReader::next() {
    std::string error;
    while (std::getline(in_, buffer_)) {
        ++line_number_;
        if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
        if (buffer_.empty()) continue;
        std::optional<Post> post =
            parse_corpus_line(buffer_, error, max_text_bytes_);
        if (post) return post;
        ++parse_errors_;
        last_error_ = "line " + std::to_string(line_number_) + ": " + error;
    }
    return std::nullopt;
}

}  // namespace streamtag
