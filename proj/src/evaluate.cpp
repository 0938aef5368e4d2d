#include "streamtag/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <deque>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

namespace streamtag {

void EvalConfig::validate() const {
    if (window_capacity < 1)
        throw std::invalid_argument("window_capacity must be >= 1");
    if (eval_count < 1) throw std::invalid_argument("eval_count must be >= 1");
    if (thread_count < 1) throw std::invalid_argument("thread_count must be >= 1");
}

namespace {

struct QueryTask {
    std::size_t index;
    SnapshotPtr snapshot;
    PostPtr query;
};

struct QueryOutcome {
    Recommendation recommendation;
};

// Fans classification out over a fixed pool with a bounded task queue.
// Results land in a caller-indexed vector, so aggregation order is the
// stream order no matter how workers interleave.
class RecommendPipeline {
public:
    RecommendPipeline(int threads, const ClassifierConfig& config,
                      std::vector<QueryOutcome>& results,
                      std::vector<double>* latencies_ms = nullptr)
        : config_(config),
          results_(results),
          latencies_ms_(latencies_ms),
          limit_(static_cast<std::size_t>(threads) * 4) {
        for (int i = 0; i < threads; ++i)
            workers_.emplace_back([this] { run(); });
    }

    void submit(QueryTask task) {
        std::unique_lock<std::mutex> lock(mutex_);
        not_full_.wait(lock, [this] { return queue_.size() < limit_; });
        queue_.push_back(std::move(task));
        lock.unlock();
        not_empty_.notify_one();
    }

    void finish() {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            done_ = true;
        }
        not_empty_.notify_all();
        for (auto& w : workers_) w.join();
        workers_.clear();
    }

private:
    void run() {
        for (;;) {
            QueryTask task;
            {
                std::unique_lock<std::mutex> lock(mutex_);
                not_empty_.wait(lock, [this] { return done_ || !queue_.empty(); });
                if (queue_.empty()) return;
                task = std::move(queue_.front());
                queue_.pop_front();
            }
            not_full_.notify_one();
            if (latencies_ms_) {
                const auto t0 = std::chrono::steady_clock::now();
                results_[task.index].recommendation =
                    classify(*task.snapshot, *task.query, config_);
                const std::chrono::duration<double, std::milli> dt =
                    std::chrono::steady_clock::now() - t0;
                (*latencies_ms_)[task.index] = dt.count();
            } else {
                results_[task.index].recommendation =
                    classify(*task.snapshot, *task.query, config_);
            }
        }
    }

    const ClassifierConfig& config_;
    std::vector<QueryOutcome>& results_;
    std::vector<double>* latencies_ms_;
    const std::size_t limit_;
    std::deque<QueryTask> queue_;
    std::mutex mutex_;
    std::condition_variable not_empty_, not_full_;
    bool done_ = false;
    std::vector<std::thread> workers_;
};

bool intersects(const std::vector<std::pair<std::string, double>>& recommended,
                const std::vector<std::string>& actual) {
    for (const auto& r : recommended)
        if (std::binary_search(actual.begin(), actual.end(), r.first))
            return true;
    return false;
}

}  // namespace

EvalReport run_evaluation(std::istream& corpus, const EvalConfig& config,
                          const ClassifierConfig& classifier_config,
                          const PreprocessConfig& preprocess_config,
                          ModelWindow& window, std::vector<EvalRow>* log) {
    config.validate();
    ClassifierConfig ccfg = classifier_config;
    ccfg.algorithm = config.classifier;
    ccfg.validate();
    if (window.capacity() != config.window_capacity)
        throw std::invalid_argument(
            "run_evaluation: window capacity does not match config");
    if (window.size() != 0)
        throw std::invalid_argument("run_evaluation: window must start empty");

    EvalReport report;
    CorpusReader reader(corpus);

    // Phase 1: fill the window with labeled posts.
    while (window.size() < config.window_capacity) {
        std::optional<Post> raw = reader.next();
        if (!raw) break;
        ProcessedPost pp = preprocess(*raw, preprocess_config);
        if (pp.hashtags.empty()) {
            ++report.skipped_unlabeled;
            continue;
        }
        window.push(std::move(pp));
    }
    if (window.size() < config.window_capacity) {
        report.truncated = true;
        return report;
    }

    // Phase 2: recommend, score, then push, for each labeled post. The
    // snapshot is taken before the post's own push, so each query sees all
    // earlier posts and nothing later.
    std::vector<QueryOutcome> outcomes(config.eval_count);
    std::vector<PostPtr> queries;
    queries.reserve(config.eval_count);

    const auto started = std::chrono::steady_clock::now();
    {
        RecommendPipeline pipeline(config.thread_count, ccfg, outcomes);
        std::size_t index = 0;
        while (index < config.eval_count) {
            std::optional<Post> raw = reader.next();
            if (!raw) break;
            ProcessedPost pp = preprocess(*raw, preprocess_config);
            if (pp.hashtags.empty()) {
                ++report.skipped_unlabeled;
                continue;
            }
            auto query = std::make_shared<const ProcessedPost>(std::move(pp));
            pipeline.submit({index, window.snapshot(), query});
            window.push(*query);
            queries.push_back(std::move(query));
            ++index;
        }
        pipeline.finish();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - started;

    report.evaluated = queries.size();
    report.truncated = queries.size() < config.eval_count;

    std::uint64_t recommended_total = 0, correct_total = 0, actual_total = 0;
    if (log) log->reserve(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const Recommendation& rec = outcomes[i].recommendation;
        const std::vector<std::string>& actual = queries[i]->hashtags;
        const bool hit = intersects(rec.entries, actual);
        if (hit) ++report.hits;
        recommended_total += rec.entries.size();
        actual_total += actual.size();
        for (const auto& e : rec.entries)
            if (std::binary_search(actual.begin(), actual.end(), e.first))
                ++correct_total;
        if (log)
            log->push_back(
                {queries[i]->id, outcomes[i].recommendation.entries, actual, hit});
    }

    report.hit_rate = report.evaluated
                          ? static_cast<double>(report.hits) /
                                static_cast<double>(report.evaluated)
                          : 0.0;
    report.precision = recommended_total
                           ? static_cast<double>(correct_total) /
                                 static_cast<double>(recommended_total)
                           : 0.0;
    report.recall = actual_total ? static_cast<double>(correct_total) /
                                       static_cast<double>(actual_total)
                                 : 0.0;
    const double pr = report.precision + report.recall;
    report.f_measure = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
    report.posts_per_second =
        elapsed.count() > 0.0
            ? static_cast<double>(report.evaluated) / elapsed.count()
            : 0.0;
    return report;
}

BenchResult run_bench(std::istream& corpus, std::size_t eval_count,
                      const ClassifierConfig& classifier_config,
                      const PreprocessConfig& preprocess_config,
                      ModelWindow& window, int thread_count) {
    classifier_config.validate();
    if (thread_count < 1) throw std::invalid_argument("thread_count must be >= 1");
    if (eval_count < 1) throw std::invalid_argument("eval_count must be >= 1");

    BenchResult result;
    CorpusReader reader(corpus);
    while (window.size() < window.capacity()) {
        std::optional<Post> raw = reader.next();
        if (!raw) break;
        ProcessedPost pp = preprocess(*raw, preprocess_config);
        if (pp.hashtags.empty()) continue;
        window.push(std::move(pp));
    }
    if (window.size() < window.capacity()) return result;
    result.window_filled = true;

    std::vector<QueryOutcome> outcomes(eval_count);
    std::vector<double> latencies_ms(eval_count, 0.0);
    std::size_t measured = 0;

    const auto started = std::chrono::steady_clock::now();
    {
        RecommendPipeline pipeline(thread_count, classifier_config, outcomes,
                                   &latencies_ms);
        while (measured < eval_count) {
            std::optional<Post> raw = reader.next();
            if (!raw) break;
            ProcessedPost pp = preprocess(*raw, preprocess_config);
            if (pp.hashtags.empty()) continue;
            auto query = std::make_shared<const ProcessedPost>(std::move(pp));
            pipeline.submit({measured, window.snapshot(), query});
            window.push(*query);
            ++measured;
        }
        pipeline.finish();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - started;

    result.measured = measured;
    if (measured == 0) return result;
    latencies_ms.resize(measured);
    std::sort(latencies_ms.begin(), latencies_ms.end());
    auto quantile = [&](double q) {
        return latencies_ms[static_cast<std::size_t>(
            q * static_cast<double>(measured - 1))];
    };
    result.p50_latency_ms = quantile(0.50);
    result.p99_latency_ms = quantile(0.99);
    result.posts_per_second =
        elapsed.count() > 0.0 ? static_cast<double>(measured) / elapsed.count()
                              : 0.0;
    return result;
}

std::string report_to_json(const EvalReport& report, int indent) {
    nlohmann::json doc;
    doc["evaluated"] = report.evaluated;
    doc["hits"] = report.hits;
    doc["hit_rate"] = report.hit_rate;
    doc["precision"] = report.precision;
    doc["recall"] = report.recall;
    doc["f_measure"] = report.f_measure;
    doc["posts_per_second"] = report.posts_per_second;
    doc["skipped_unlabeled"] = report.skipped_unlabeled;
    doc["truncated"] = report.truncated;
    return doc.dump(indent);
}

EvalReport report_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    EvalReport report;
    report.evaluated = doc.at("evaluated").get<std::uint64_t>();
    report.hits = doc.at("hits").get<std::uint64_t>();
    report.hit_rate = doc.at("hit_rate").get<double>();
    report.precision = doc.at("precision").get<double>();
    report.recall = doc.at("recall").get<double>();
    report.f_measure = doc.at("f_measure").get<double>();
    report.posts_per_second = doc.at("posts_per_second").get<double>();
    report.skipped_unlabeled = doc.at("skipped_unlabeled").get<std::uint64_t>();
    report.truncated = doc.at("truncated").get<bool>();
    return report;
}

void write_report(const EvalReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    out << report_to_json(report, 2) << '\n';
    if (!out) throw std::runtime_error("failed writing report file: " + path);
}

namespace {

std::string join_tags(const std::vector<std::string>& tags) {
    std::string out;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i) out.push_back('|');
        out += tags[i];
    }
    return out;
}

std::string format_score(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

}  // namespace

void write_log_csv(const std::vector<EvalRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open log file: " + path);
    out << "post_id,recommended,scores,actual,hit\n";
    for (const EvalRow& row : rows) {
        std::string recommended, scores;
        for (std::size_t i = 0; i < row.recommended.size(); ++i) {
            if (i) {
                recommended.push_back('|');
                scores.push_back('|');
            }
            recommended += row.recommended[i].first;
            scores += format_score(row.recommended[i].second);
        }
        out << row.post_id << ',' << recommended << ',' << scores << ','
            << join_tags(row.actual) << ',' << (row.hit ? 1 : 0) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing log file: " + path);
}

}  // namespace streamtag
