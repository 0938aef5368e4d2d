#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "streamtag/classify.hpp"
#include "streamtag/corpus.hpp"
#include "streamtag/preprocess.hpp"
#include "streamtag/window.hpp"

namespace streamtag {

struct EvalConfig {
    std::size_t window_capacity = 1'000'000;
    std::size_t eval_count = 1'000'000;
    Algorithm classifier = Algorithm::hybrid;
    int thread_count = 1;

    void validate() const;  // throws std::invalid_argument
};

struct EvalReport {
    std::uint64_t evaluated = 0;
    std::uint64_t hits = 0;
    double hit_rate = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    double posts_per_second = 0.0;
    std::uint64_t skipped_unlabeled = 0;
    bool truncated = false;
};

// One line of the optional per-post log.
struct EvalRow {
    std::string post_id;
    std::vector<std::pair<std::string, double>> recommended;
    std::vector<std::string> actual;
    bool hit = false;
};

// Replays the corpus: fills `window` with the first window_capacity labeled
// posts, then for each of the next eval_count labeled posts produces a
// recommendation against the pre-push snapshot, scores it, and pushes the
// post. Recommendation work fans out over thread_count workers; every query
// still sees exactly the sequential window state, so reports are identical
// for any thread count (except posts_per_second). `window` must be freshly
// constructed with capacity == config.window_capacity.
EvalReport run_evaluation(std::istream& corpus, const EvalConfig& config,
                          const ClassifierConfig& classifier_config,
                          const PreprocessConfig& preprocess_config,
                          ModelWindow& window,
                          std::vector<EvalRow>* log = nullptr);

struct BenchResult {
    std::size_t measured = 0;
    double posts_per_second = 0.0;
    double p50_latency_ms = 0.0;
    double p99_latency_ms = 0.0;
    bool window_filled = false;
};

// Steady-state throughput: fills the window from the corpus head, then
// replays up to eval_count labeled posts (recommend against the pre-push
// snapshot, then push), recording per-recommendation latency.
BenchResult run_bench(std::istream& corpus, std::size_t eval_count,
                      const ClassifierConfig& classifier_config,
                      const PreprocessConfig& preprocess_config,
                      ModelWindow& window, int thread_count);

// Report serialization: a flat JSON object with a fixed field set.
std::string report_to_json(const EvalReport& report, int indent = -1);
EvalReport report_from_json(const std::string& text);
void write_report(const EvalReport& report, const std::string& path);

// Per-post CSV log: header `post_id,recommended,scores,actual,hit`, lists
// joined with '|'.
void write_log_csv(const std::vector<EvalRow>& rows, const std::string& path);

}  // namespace streamtag
