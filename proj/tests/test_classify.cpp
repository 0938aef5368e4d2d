#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "reference.hpp"
#include "streamtag/classify.hpp"
#include "test_support.hpp"

using namespace streamtag;
using testsup::post;

namespace {

std::vector<std::string> tags_of(const Recommendation& rec) {
    std::vector<std::string> tags;
    for (const auto& e : rec.entries) tags.push_back(e.first);
    return tags;
}

void require_equal(const Recommendation& got, const Recommendation& want) {
    REQUIRE(got.entries.size() == want.entries.size());
    for (std::size_t i = 0; i < got.entries.size(); ++i) {
        CAPTURE(i);
        CHECK(got.entries[i].first == want.entries[i].first);
        CHECK(got.entries[i].second == want.entries[i].second);
    }
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("config validation") {
    ClassifierConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.top_n = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.knn_k = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.nb_weight = 0.0;
    cfg.knn_weight = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("similar_posts basics") {
    ModelWindow w(8);
    w.push(post("1", {"storm", "flood"}, {"t"}));
    w.push(post("2", {"storm", "sunny"}, {"t"}));
    w.push(post("3", {"picnic"}, {"t"}));
    auto snap = w.snapshot();
    ClassifierConfig cfg;

    CHECK(similar_posts(*snap, post("q", {}, {}), cfg).empty());

    auto ids = similar_posts(*snap, post("q", {"flood", "picnic"}, {}), cfg);
    CHECK(ids == std::vector<std::string>{"1", "3"});
}

TEST_CASE("similar_posts favors rare words") {
    ModelWindow w(16);
    for (int i = 0; i < 9; ++i)
        w.push(post("c" + std::to_string(i), {"common", "filler"}, {"t"}));
    w.push(post("rare1", {"gem", "common"}, {"t"}));
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    cfg.idf_query_words = 1;  // only the rarest word is used
    auto ids = similar_posts(*snap, post("q", {"common", "gem"}, {}), cfg);
    CHECK(ids == std::vector<std::string>{"rare1"});
}

TEST_CASE("nb worked example") {
    // 4 posts: {flood|weather} x2, {goal|sport} x2, all word_counts 1.
    ModelWindow w(8);
    w.push(post("1", {"flood"}, {"weather"}));
    w.push(post("2", {"flood"}, {"weather"}));
    w.push(post("3", {"goal"}, {"sport"}));
    w.push(post("4", {"goal"}, {"sport"}));
    auto snap = w.snapshot();
    ClassifierConfig cfg;

    Recommendation rec = nb_classify(*snap, post("q", {"flood"}, {}), cfg);
    REQUIRE(rec.entries.size() == 1);  // sport has no candidate support
    CHECK(rec.entries[0].first == "weather");
    // P(flood|weather)=1, P(weather)=0.5, P(flood)=0.5, weight 1.5
    CHECK(rec.entries[0].second == doctest::Approx(1.5));
}

TEST_CASE("nb empty candidates give empty recommendation") {
    ModelWindow w(4);
    w.push(post("1", {"flood"}, {"weather"}));
    auto snap = w.snapshot();
    Recommendation rec =
        nb_classify(*snap, post("q", {"unrelated"}, {}), ClassifierConfig{});
    CHECK(rec.empty());
}

TEST_CASE("nb summing keeps partial evidence") {
    ModelWindow w(8);
    w.push(post("1", {"flood", "storm"}, {"weather"}));
    w.push(post("2", {"goal"}, {"sport"}));
    auto snap = w.snapshot();
    // "goal" never co-occurs with weather; "flood" always does.
    Recommendation rec =
        nb_classify(*snap, post("q", {"flood", "goal"}, {}), ClassifierConfig{});
    REQUIRE(!rec.empty());
    bool found = false;
    for (const auto& e : rec.entries)
        if (e.first == "weather") {
            found = true;
            CHECK(e.second > 0.0);
        }
    CHECK(found);
}

TEST_CASE("knn worked example") {
    ModelWindow w(4);
    w.push(post("1", {"storm", "flood"}, {"weather"}));
    w.push(post("2", {"storm"}, {"news"}));
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    cfg.knn_k = 1;
    Recommendation rec = knn_classify(*snap, post("q", {"storm", "flood"}, {}), cfg);
    REQUIRE(rec.entries.size() == 1);
    CHECK(rec.entries[0].first == "weather");
    CHECK(rec.entries[0].second == 1.0);  // one neighbor vote
}

TEST_CASE("knn with no shared terms is empty") {
    ModelWindow w(4);
    w.push(post("1", {"alpha"}, {"t"}));
    auto snap = w.snapshot();
    Recommendation rec =
        knn_classify(*snap, post("q", {"beta"}, {}), ClassifierConfig{});
    CHECK(rec.empty());
}

TEST_CASE("knn clamps K to candidate count") {
    ModelWindow w(8);
    w.push(post("1", {"flood"}, {"weather"}));
    w.push(post("2", {"flood"}, {"news"}));
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    cfg.knn_k = 50;
    Recommendation rec = knn_classify(*snap, post("q", {"flood"}, {}), cfg);
    CHECK(rec.entries.size() == 2);  // both posts vote
}

TEST_CASE("hybrid membership weights") {
    // NB = {a,b,c}, KNN = {c,d,e} -> c: 1.0, d/e: 0.6, a/b: 0.4.
    Recommendation nb{{{"a", 9.0}, {"b", 5.0}, {"c", 1.0}}};
    Recommendation knn{{{"c", 3.0}, {"d", 2.0}, {"e", 1.0}}};
    ClassifierConfig cfg;
    Recommendation combined = combine_recommendations(nb, knn, cfg);
    REQUIRE(combined.entries.size() == 3);
    CHECK(combined.entries[0].first == "c");
    CHECK(combined.entries[0].second == doctest::Approx(1.0));
    // d outranks e on the normalized-score tie-break (2.0 vs 1.0 in KNN)
    CHECK(combined.entries[1].first == "d");
    CHECK(combined.entries[1].second == doctest::Approx(0.6));
    CHECK(combined.entries[2].first == "e");

    cfg.top_n = 5;
    combined = combine_recommendations(nb, knn, cfg);
    REQUIRE(combined.entries.size() == 5);
    CHECK(combined.entries[3].first == "a");  // 0.4, tie-break: nb norm 1.0
    CHECK(combined.entries[3].second == doctest::Approx(0.4));
    CHECK(combined.entries[4].first == "b");
}

TEST_CASE("hybrid of two empties is empty") {
    CHECK(combine_recommendations({}, {}, ClassifierConfig{}).empty());
}

TEST_CASE("hybrid combined scores stay in the membership lattice") {
    testsup::RandomPosts gen(31, 18, 6);
    ModelWindow w(30);
    for (int i = 0; i < 30; ++i) w.push(gen.next_post());
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    for (int i = 0; i < 50; ++i) {
        Recommendation rec = hybrid_classify(*snap, gen.next_query(), cfg);
        for (const auto& e : rec.entries) {
            const bool ok = e.second == doctest::Approx(0.4) ||
                            e.second == doctest::Approx(0.6) ||
                            e.second == doctest::Approx(1.0);
            CHECK(ok);
        }
    }
}

TEST_CASE("candidate containment") {
    testsup::RandomPosts gen(41, 20, 8);
    ModelWindow w(40);
    for (int i = 0; i < 40; ++i) w.push(gen.next_post());
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    for (int i = 0; i < 60; ++i) {
        ProcessedPost q = gen.next_query();
        auto ids = similar_posts(*snap, q, cfg);
        std::set<std::string> allowed;
        for (const auto& id : ids)
            for (const auto& h : snap->post(id)->hashtags) allowed.insert(h);
        for (const Recommendation& rec :
             {nb_classify(*snap, q, cfg), knn_classify(*snap, q, cfg),
              hybrid_classify(*snap, q, cfg)}) {
            for (const auto& e : rec.entries) CHECK(allowed.count(e.first) == 1);
        }
    }
}

TEST_CASE("nb score never decreases when adding a query word") {
    testsup::RandomPosts gen(51, 15, 5);
    ModelWindow w(30);
    for (int i = 0; i < 30; ++i) w.push(gen.next_post());
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    cfg.top_n = 100;  // observe all scores
    cfg.idf_query_words = 100;  // keep the candidate set monotone too
    for (int i = 0; i < 40; ++i) {
        ProcessedPost q = gen.next_query(3);
        ProcessedPost q2 = q;
        q2.words.push_back(gen.vocab[gen.pick(gen.vocab.size())]);
        finalize_post(q2);
        Recommendation before = nb_classify(*snap, q, cfg);
        Recommendation after = nb_classify(*snap, q2, cfg);
        for (const auto& b : before.entries) {
            for (const auto& a : after.entries)
                if (a.first == b.first) CHECK(a.second >= b.second);
        }
    }
}

TEST_CASE("knn similarity never decreases when sharing one more word") {
    ModelWindow w(8);
    w.push(post("1", {"aaa", "bbb", "ccc"}, {"t1"}));
    w.push(post("2", {"aaa"}, {"t2"}));
    auto snap = w.snapshot();
    ClassifierConfig cfg;
    cfg.knn_k = 1;
    // Sharing only "aaa" ties both posts; sharing "bbb" too must pick post 1.
    Recommendation rec = knn_classify(*snap, post("q", {"aaa", "bbb"}, {}), cfg);
    REQUIRE(!rec.empty());
    CHECK(rec.entries[0].first == "t1");
}

TEST_CASE("ranking invariant under uniform word-weight scaling") {
    testsup::RandomPosts gen(61, 16, 6);
    ModelWindow w(40);
    for (int i = 0; i < 40; ++i) w.push(gen.next_post());
    auto snap = w.snapshot();

    ClassifierConfig base;
    ClassifierConfig scaled;
    scaled.term_weights.mention_weight *= 3.5;
    scaled.term_weights.base_word_weight *= 3.5;
    scaled.term_weights.per_letter_bonus *= 3.5;

    for (int i = 0; i < 40; ++i) {
        ProcessedPost q = gen.next_query();
        CHECK(tags_of(nb_classify(*snap, q, base)) ==
              tags_of(nb_classify(*snap, q, scaled)));
        CHECK(tags_of(knn_classify(*snap, q, base)) ==
              tags_of(knn_classify(*snap, q, scaled)));
        CHECK(tags_of(hybrid_classify(*snap, q, base)) ==
              tags_of(hybrid_classify(*snap, q, scaled)));
    }
}

TEST_CASE("oracle equivalence on random instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        CAPTURE(seed);
        testsup::RandomPosts gen(900 + seed, 5 + seed % 26, 2 + seed % 9);
        const std::size_t window_size = 1 + gen.pick(50);
        ModelWindow w(window_size);
        std::deque<ProcessedPost> queue;
        const int pushes = 1 + static_cast<int>(gen.pick(60));
        for (int i = 0; i < pushes; ++i) {
            ProcessedPost p = gen.next_post();
            queue.push_back(p);
            if (queue.size() > window_size) queue.pop_front();
            w.push(std::move(p));
        }
        std::vector<ProcessedPost> posts(queue.begin(), queue.end());
        auto snap = w.snapshot();

        ClassifierConfig cfg;
        cfg.top_n = 1 + static_cast<int>(gen.pick(4));
        cfg.knn_k = 1 + static_cast<int>(gen.pick(12));

        for (int qn = 0; qn < 8; ++qn) {
            ProcessedPost q = gen.next_query();
            CHECK(similar_posts(*snap, q, cfg) ==
                  refimpl::ref_similar(posts, q, cfg));
            require_equal(nb_classify(*snap, q, cfg),
                          refimpl::ref_nb(posts, q, cfg));
            require_equal(knn_classify(*snap, q, cfg),
                          refimpl::ref_knn(posts, q, cfg));
            require_equal(hybrid_classify(*snap, q, cfg),
                          refimpl::ref_hybrid(posts, q, cfg));
        }
    }
}

TEST_CASE("recommend excludes the query's own hashtags") {
    ModelWindow w(4);
    w.push(post("1", {"funny", "joke"}, {"laughoutloud"}));
    w.push(post("2", {"serious", "news"}, {"breaking"}));

    ClassifierConfig cfg;
    PreprocessConfig pcfg;
    Post query{"q", 0, "Just heard a funny #joke"};
    Recommendation rec = recommend(w, query, cfg, pcfg);
    // Without the word "joke", only "funny" links to post 1.
    REQUIRE(!rec.empty());
    CHECK(rec.entries[0].first == "laughoutloud");

    // The word joke never participates: a window keyed only on "joke"
    // yields nothing for this query.
    ModelWindow w2(4);
    w2.push(post("1", {"joke"}, {"laughoutloud"}));
    CHECK(recommend(w2, query, cfg, pcfg).empty());
}

TEST_CASE("recommend with no features is empty") {
    ModelWindow w(4);
    w.push(post("1", {"word"}, {"t"}));
    Recommendation rec = recommend(w, Post{"q", 0, "http://x.co"},
                                   ClassifierConfig{}, PreprocessConfig{});
    CHECK(rec.empty());
}

TEST_CASE("recommend is deterministic") {
    testsup::RandomPosts gen(71, 12, 5);
    ModelWindow w(24);
    for (int i = 0; i < 24; ++i) w.push(gen.next_post());
    Post query{"q", 0, "word1 word2 word3 @user1"};
    ClassifierConfig cfg;
    PreprocessConfig pcfg;
    Recommendation first = recommend(w, query, cfg, pcfg);
    for (int i = 0; i < 5; ++i) require_equal(recommend(w, query, cfg, pcfg), first);
}

}  // TEST_SUITE
