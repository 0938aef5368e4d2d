#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace streamtag {

// One raw stream item as parsed from the corpus.
struct Post {
    std::string id;
    std::int64_t timestamp = 0;  // epoch milliseconds
    std::string text;
};

// Output of the preprocessing pipeline. `hashtags` are the class labels of
// the post; `words` never contains a token equal to one of its hashtags
// unless the include-hashtag ablation is enabled. `terms` is the sorted,
// deduplicated union of words and mentions and is what the window indexes.
struct ProcessedPost {
    std::string id;
    std::vector<std::string> words;     // ordered feature words
    std::vector<std::string> mentions;  // '@'-prefixed tokens
    std::vector<std::string> hashtags;  // sorted unique, '#' stripped
    int word_count = 0;                 // |words| + |mentions|
    std::vector<std::string> terms;     // sorted unique words + mentions

    bool has_term(const std::string& t) const {
        return std::binary_search(terms.begin(), terms.end(), t);
    }
};

using PostPtr = std::shared_ptr<const ProcessedPost>;

// Recomputes the derived fields (word_count, terms, hashtag ordering) from
// words/mentions/hashtags. Every constructor path must call this.
inline void finalize_post(ProcessedPost& p) {
    p.word_count = static_cast<int>(p.words.size() + p.mentions.size());
    p.terms.clear();
    p.terms.reserve(p.words.size() + p.mentions.size());
    p.terms.insert(p.terms.end(), p.words.begin(), p.words.end());
    p.terms.insert(p.terms.end(), p.mentions.begin(), p.mentions.end());
    std::sort(p.terms.begin(), p.terms.end());
    p.terms.erase(std::unique(p.terms.begin(), p.terms.end()), p.terms.end());
    std::sort(p.hashtags.begin(), p.hashtags.end());
    p.hashtags.erase(std::unique(p.hashtags.begin(), p.hashtags.end()),
                     p.hashtags.end());
}

inline ProcessedPost make_processed_post(std::string id,
                                         std::vector<std::string> words,
                                         std::vector<std::string> mentions,
                                         std::vector<std::string> hashtags) {
    ProcessedPost p;
    p.id = std::move(id);
    p.words = std::move(words);
    p.mentions = std::move(mentions);
    p.hashtags = std::move(hashtags);
    finalize_post(p);
    return p;
}

}  // namespace streamtag
