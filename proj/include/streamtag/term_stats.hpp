#pragma once

#include <string>
#include <string_view>

#include "streamtag/window.hpp"

namespace streamtag {

struct TermWeightConfig {
    double mention_weight = 3.0;
    double per_letter_bonus = 0.1;
    double base_word_weight = 1.0;
};

// Inverse document frequency over the window: ln(total / doc_freq).
// Unseen words get the sentinel ln(2 * total), strictly above any attainable
// IDF, so they rank as maximally rare. Throws std::domain_error on an empty
// window.
double idf(const Snapshot& snapshot, const std::string& word);

// Term-Corpus Relevance: (1/fl(w) + 1/c_w) / 2 where fl is the mean
// word_count of posts containing w and c_w the number of distinct
// co-occurring hashtags. Unseen words score 0; degenerate reciprocals drop
// to 0 instead of erroring.
double tcor(const Snapshot& snapshot, const std::string& word);

// Mentions get a flat weight; other words 1 + 0.1 per character (Unicode
// scalar values). Throws std::invalid_argument on an empty word.
double word_weight(std::string_view word, const TermWeightConfig& config = {});

}  // namespace streamtag
