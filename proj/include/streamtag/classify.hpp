#pragma once

#include <string>
#include <utility>
#include <vector>

#include "streamtag/preprocess.hpp"
#include "streamtag/term_stats.hpp"
#include "streamtag/types.hpp"
#include "streamtag/window.hpp"

namespace streamtag {

enum class Algorithm { nb, knn, hybrid };

struct ClassifierConfig {
    int top_n = 3;            // recommendations to return
    int knn_k = 10;           // neighbors to consider
    double nb_weight = 0.4;   // hybrid weight of a Naive Bayes vote
    double knn_weight = 0.6;  // hybrid weight of a KNN vote
    int idf_query_words = 3;  // query words used for candidate retrieval
    TermWeightConfig term_weights;
    Algorithm algorithm = Algorithm::hybrid;

    void validate() const;  // throws std::invalid_argument
};

// Ranked (hashtag, score) pairs, descending score, deterministic order.
struct Recommendation {
    std::vector<std::pair<std::string, double>> entries;

    bool empty() const { return entries.empty(); }
    bool contains(const std::string& tag) const {
        for (const auto& e : entries)
            if (e.first == tag) return true;
        return false;
    }
};

// Candidate retrieval: the query's terms are ranked by IDF (ties broken
// lexicographically), the top idf_query_words are kept, and the union of
// their postings is returned as sorted post ids.
std::vector<std::string> similar_posts(const Snapshot& snapshot,
                                       const ProcessedPost& query,
                                       const ClassifierConfig& config);

// Summed Naive Bayes over the candidate posts' hashtags:
// score(h) = sum over query terms of P(w|h) * P(h) / P(w) * word_weight(w).
// Zero-count terms contribute nothing, zero-score hashtags are dropped.
Recommendation nb_classify(const Snapshot& snapshot, const ProcessedPost& query,
                           const ClassifierConfig& config);

// TCoR-weighted K-nearest-neighbor: candidates are scored by the summed
// tcor(w) * word_weight(w) over terms shared with the query; the hashtags of
// the K most similar posts are tallied one vote per post.
Recommendation knn_classify(const Snapshot& snapshot, const ProcessedPost& query,
                            const ClassifierConfig& config);

// Membership combination of the two base classifiers: each hashtag scores
// nb_weight if it appears in the NB list plus knn_weight if it appears in
// the KNN list; ties break on min-max-normalized internal scores, then
// lexicographically.
Recommendation hybrid_classify(const Snapshot& snapshot,
                               const ProcessedPost& query,
                               const ClassifierConfig& config);

// The combination rule of hybrid_classify, exposed for direct use on
// precomputed sub-recommendations.
Recommendation combine_recommendations(const Recommendation& nb,
                                       const Recommendation& knn,
                                       const ClassifierConfig& config);

// Dispatches on config.algorithm.
Recommendation classify(const Snapshot& snapshot, const ProcessedPost& query,
                        const ClassifierConfig& config);

// Full query path: preprocess the raw post (its hashtags stay out of the
// feature set unless the preprocessing config includes them) and classify
// against the window's current snapshot.
Recommendation recommend(const ModelWindow& window, const Post& raw_post,
                         const ClassifierConfig& config,
                         const PreprocessConfig& preprocess_config);

}  // namespace streamtag
