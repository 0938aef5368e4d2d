#include "streamtag/term_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "streamtag/detail/unicode.hpp"

namespace streamtag {

double idf(const Snapshot& snapshot, const std::string& word) {
    const double total = static_cast<double>(snapshot.total_posts());
    if (snapshot.total_posts() <= 0)
        throw std::domain_error("idf: empty window has no statistics");
    const WordStats* ws = snapshot.word(word);
    if (!ws || ws->doc_freq == 0) return std::log(total * 2.0);
    return std::log(total / static_cast<double>(ws->doc_freq));
}

double tcor(const Snapshot& snapshot, const std::string& word) {
    const WordStats* ws = snapshot.word(word);
    if (!ws || ws->doc_freq == 0) return 0.0;
    const double fl =
        static_cast<double>(ws->length_sum) / static_cast<double>(ws->doc_freq);
    const double cw = static_cast<double>(ws->cooccurring_hashtags());
    const double fl_term = fl > 0.0 ? 1.0 / fl : 0.0;
    const double cw_term = cw > 0.0 ? 1.0 / cw : 0.0;
    return (fl_term + cw_term) / 2.0;
}

double word_weight(std::string_view word, const TermWeightConfig& config) {
    if (word.empty())
        throw std::invalid_argument("word_weight: empty word");
    if (word.front() == '@') return config.mention_weight;
    return config.base_word_weight +
           config.per_letter_bonus * static_cast<double>(unicode::length(word));
}

}  // namespace streamtag
