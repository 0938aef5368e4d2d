#include "streamtag/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace streamtag {

void ClassifierConfig::validate() const {
    if (top_n < 1) throw std::invalid_argument("top_n must be >= 1");
    if (knn_k < 1) throw std::invalid_argument("knn_k must be >= 1");
    if (idf_query_words < 1)
        throw std::invalid_argument("idf_query_words must be >= 1");
    if (!(nb_weight + knn_weight > 0.0))
        throw std::invalid_argument("nb_weight + knn_weight must be positive");
    if (nb_weight < 0.0 || knn_weight < 0.0)
        throw std::invalid_argument("classifier weights must be non-negative");
    if (term_weights.mention_weight < 0.0 || term_weights.per_letter_bonus < 0.0 ||
        term_weights.base_word_weight < 0.0)
        throw std::invalid_argument("term weights must be non-negative");
}

namespace {

struct QueryTerm {
    const std::string* term;   // points into query.terms (sorted unique)
    const WordStats* stats;    // null when unseen in the window
    double idf_score;
    double tcor_score;
    double weight;
};

// Builds per-term statistics in the query's sorted term order. Summations
// below iterate this vector, which pins floating-point evaluation order and
// keeps results identical across thread counts.
std::vector<QueryTerm> build_query_terms(const Snapshot& snapshot,
                                         const ProcessedPost& query,
                                         const ClassifierConfig& config) {
    std::vector<QueryTerm> terms;
    terms.reserve(query.terms.size());
    for (const std::string& t : query.terms) {
        QueryTerm qt;
        qt.term = &t;
        qt.stats = snapshot.word(t);
        qt.idf_score = idf(snapshot, t);
        qt.tcor_score = tcor(snapshot, t);
        qt.weight = word_weight(t, config.term_weights);
        terms.push_back(qt);
    }
    return terms;
}

// Candidate posts sorted by id: the union of postings of the top-IDF terms.
std::vector<PostPtr> gather_candidates(const std::vector<QueryTerm>& terms,
                                       const ClassifierConfig& config) {
    std::vector<const QueryTerm*> ranked;
    ranked.reserve(terms.size());
    for (const QueryTerm& qt : terms) ranked.push_back(&qt);
    std::sort(ranked.begin(), ranked.end(),
              [](const QueryTerm* a, const QueryTerm* b) {
                  if (a->idf_score != b->idf_score)
                      return a->idf_score > b->idf_score;
                  return *a->term < *b->term;
              });
    const std::size_t take =
        std::min<std::size_t>(ranked.size(),
                              static_cast<std::size_t>(config.idf_query_words));

    std::vector<PostPtr> candidates;
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < take; ++i) {
        if (!ranked[i]->stats) continue;
        ranked[i]->stats->postings.for_each(
            [&](const std::string&, const PostPtr& post) {
                if (seen.insert(post->id).second) candidates.push_back(post);
            });
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const PostPtr& a, const PostPtr& b) { return a->id < b->id; });
    return candidates;
}

bool snapshot_empty(const Snapshot& snapshot) {
    return snapshot.total_posts() == 0;
}

Recommendation nb_from_candidates(const Snapshot& snapshot,
                                  const std::vector<QueryTerm>& terms,
                                  const std::vector<PostPtr>& candidates,
                                  const ClassifierConfig& config) {
    std::unordered_set<std::string> tag_set;
    for (const PostPtr& post : candidates)
        for (const std::string& h : post->hashtags) tag_set.insert(h);

    const double total = static_cast<double>(snapshot.total_posts());
    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(tag_set.size());
    for (const std::string& h : tag_set) {
        const HashtagStats* hs = snapshot.hashtag(h);
        const double tag_count = static_cast<double>(hs->post_count);
        double score = 0.0;
        for (const QueryTerm& qt : terms) {
            if (!qt.stats) continue;
            const std::int32_t* co = qt.stats->cooc.get(h);
            if (!co) continue;
            const double p_w_h = static_cast<double>(*co) / tag_count;
            const double p_h = tag_count / total;
            const double p_w = static_cast<double>(qt.stats->doc_freq) / total;
            score += p_w_h * p_h / p_w * qt.weight;
        }
        if (score > 0.0) scored.emplace_back(h, score);
    }

    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    if (scored.size() > static_cast<std::size_t>(config.top_n))
        scored.resize(static_cast<std::size_t>(config.top_n));
    return Recommendation{std::move(scored)};
}

Recommendation knn_from_candidates(const std::vector<QueryTerm>& terms,
                                   const std::vector<PostPtr>& candidates,
                                   const ClassifierConfig& config) {
    struct Neighbor {
        const ProcessedPost* post;
        double similarity;
    };
    std::vector<Neighbor> neighbors;
    for (const PostPtr& post : candidates) {
        double sim = 0.0;
        for (const QueryTerm& qt : terms) {
            if (post->has_term(*qt.term)) sim += qt.tcor_score * qt.weight;
        }
        // A similarity of zero carries no evidence, so such posts never
        // become neighbors.
        if (sim > 0.0) neighbors.push_back({post.get(), sim});
    }
    std::sort(neighbors.begin(), neighbors.end(),
              [](const Neighbor& a, const Neighbor& b) {
                  if (a.similarity != b.similarity)
                      return a.similarity > b.similarity;
                  return a.post->id < b.post->id;
              });
    if (neighbors.size() > static_cast<std::size_t>(config.knn_k))
        neighbors.resize(static_cast<std::size_t>(config.knn_k));

    struct Tally {
        std::int64_t votes = 0;
        double similarity_sum = 0.0;
    };
    std::unordered_map<std::string, Tally> tallies;
    for (const Neighbor& n : neighbors) {
        for (const std::string& h : n.post->hashtags) {
            Tally& t = tallies[h];
            t.votes += 1;
            t.similarity_sum += n.similarity;
        }
    }

    std::vector<std::pair<std::string, Tally>> ranked(tallies.begin(),
                                                      tallies.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.votes != b.second.votes) return a.second.votes > b.second.votes;
        if (a.second.similarity_sum != b.second.similarity_sum)
            return a.second.similarity_sum > b.second.similarity_sum;
        return a.first < b.first;
    });

    Recommendation rec;
    const std::size_t take =
        std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(config.top_n));
    rec.entries.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        rec.entries.emplace_back(ranked[i].first,
                                 static_cast<double>(ranked[i].second.votes));
    return rec;
}

// Normalized score used only for hybrid tie-breaking. A single-valued list
// normalizes to 1: membership at the list's only level is full support.
double normalized_score(const Recommendation& rec, const std::string& tag) {
    if (rec.entries.empty()) return 0.0;
    double mn = rec.entries.front().second, mx = rec.entries.front().second;
    for (const auto& e : rec.entries) {
        mn = std::min(mn, e.second);
        mx = std::max(mx, e.second);
    }
    for (const auto& e : rec.entries) {
        if (e.first == tag) return mx > mn ? (e.second - mn) / (mx - mn) : 1.0;
    }
    return 0.0;
}

}  // namespace

std::vector<std::string> similar_posts(const Snapshot& snapshot,
                                       const ProcessedPost& query,
                                       const ClassifierConfig& config) {
    config.validate();
    if (query.terms.empty() || snapshot_empty(snapshot)) return {};
    std::vector<QueryTerm> terms = build_query_terms(snapshot, query, config);
    std::vector<PostPtr> candidates = gather_candidates(terms, config);
    std::vector<std::string> ids;
    ids.reserve(candidates.size());
    for (const PostPtr& p : candidates) ids.push_back(p->id);
    return ids;
}

Recommendation nb_classify(const Snapshot& snapshot, const ProcessedPost& query,
                           const ClassifierConfig& config) {
    config.validate();
    if (query.terms.empty() || snapshot_empty(snapshot)) return {};
    std::vector<QueryTerm> terms = build_query_terms(snapshot, query, config);
    return nb_from_candidates(snapshot, terms, gather_candidates(terms, config),
                              config);
}

Recommendation knn_classify(const Snapshot& snapshot, const ProcessedPost& query,
                            const ClassifierConfig& config) {
    config.validate();
    if (query.terms.empty() || snapshot_empty(snapshot)) return {};
    std::vector<QueryTerm> terms = build_query_terms(snapshot, query, config);
    return knn_from_candidates(terms, gather_candidates(terms, config), config);
}

Recommendation combine_recommendations(const Recommendation& nb,
                                       const Recommendation& knn,
                                       const ClassifierConfig& config) {
    struct Combined {
        double score = 0.0;
        double tie_break = 0.0;
    };
    std::unordered_map<std::string, Combined> combined;
    for (const auto& e : nb.entries) combined[e.first].score += config.nb_weight;
    for (const auto& e : knn.entries) combined[e.first].score += config.knn_weight;
    for (auto& [tag, c] : combined)
        c.tie_break = normalized_score(nb, tag) + normalized_score(knn, tag);

    std::vector<std::pair<std::string, Combined>> ranked(combined.begin(),
                                                         combined.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.score != b.second.score) return a.second.score > b.second.score;
        if (a.second.tie_break != b.second.tie_break)
            return a.second.tie_break > b.second.tie_break;
        return a.first < b.first;
    });

    Recommendation rec;
    const std::size_t take =
        std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(config.top_n));
    rec.entries.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        rec.entries.emplace_back(ranked[i].first, ranked[i].second.score);
    return rec;
}

Recommendation hybrid_classify(const Snapshot& snapshot,
                               const ProcessedPost& query,
                               const ClassifierConfig& config) {
    config.validate();
    if (query.terms.empty() || snapshot_empty(snapshot)) return {};
    std::vector<QueryTerm> terms = build_query_terms(snapshot, query, config);
    std::vector<PostPtr> candidates = gather_candidates(terms, config);
    Recommendation nb = nb_from_candidates(snapshot, terms, candidates, config);
    Recommendation knn = knn_from_candidates(terms, candidates, config);
    return combine_recommendations(nb, knn, config);
}

Recommendation classify(const Snapshot& snapshot, const ProcessedPost& query,
                        const ClassifierConfig& config) {
    switch (config.algorithm) {
        case Algorithm::nb:
            return nb_classify(snapshot, query, config);
        case Algorithm::knn:
            return knn_classify(snapshot, query, config);
        case Algorithm::hybrid:
            break;
    }
    return hybrid_classify(snapshot, query, config);
}

Recommendation recommend(const ModelWindow& window, const Post& raw_post,
                         const ClassifierConfig& config,
                         const PreprocessConfig& preprocess_config) {
    ProcessedPost query = preprocess(raw_post, preprocess_config);
    if (query.terms.empty()) return {};
    SnapshotPtr snap = window.snapshot();
    return classify(*snap, query, config);
}

}  // namespace streamtag
