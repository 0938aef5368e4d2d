#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "streamtag/types.hpp"

namespace streamtag {

struct StopwordList {
    std::unordered_set<std::string> words;
    bool contains(const std::string& word) const;
};

// The pinned built-in list (175 English words + "rt"/"via").
std::shared_ptr<const StopwordList> default_stopwords();

// Loads one lowercase word per line; '#'-prefixed lines are comments.
// Throws std::runtime_error with the path on I/O failure.
std::shared_ptr<const StopwordList> load_stopwords(const std::string& path);

struct PreprocessConfig {
    std::shared_ptr<const StopwordList> stopwords = default_stopwords();
    int min_word_length = 3;  // in Unicode scalar values
    bool stemming = false;
    // Ablation switch: hashtag tokens additionally contribute their bare
    // text as feature words, and words matching a hashtag are kept. Off by
    // default; the default pipeline guarantees words and hashtags disjoint.
    bool include_hashtag_words = false;
};

// Splits on Unicode whitespace, preserving '#'/'@' sigils and token order.
std::vector<std::string> tokenize(std::string_view text);

// Applies the cleaning pipeline: URL removal, hashtag and mention
// extraction, lowercasing and punctuation stripping, stop-word and
// short/numeric word removal, optional stemming. Never fails; the worst
// case is a post with no features.
ProcessedPost preprocess(const Post& post, const PreprocessConfig& config);

inline ProcessedPost preprocess(const Post& post) {
    static const PreprocessConfig kDefault{};
    return preprocess(post, kDefault);
}

}  // namespace streamtag
