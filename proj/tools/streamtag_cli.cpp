// streamtag command line: corpus generation, one-shot recommendation, replay
// evaluation and throughput benchmarking.
//
// Exit codes: 0 success, 2 usage/config error, 3 I/O error, 4 insufficient
// corpus data. Machine-readable output goes to stdout as JSON; diagnostics
// to stderr.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "streamtag/classify.hpp"
#include "streamtag/corpus.hpp"
#include "streamtag/evaluate.hpp"
#include "streamtag/preprocess.hpp"
#include "streamtag/synth.hpp"
#include "streamtag/window.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInsufficientData = 4;

struct CommonFlags {
    std::string corpus_path;
    std::size_t window_size = 1000;
    std::string classifier = "hybrid";
    int top_n = 3;
    int k = 10;
    double nb_weight = 0.4;
    double knn_weight = 0.6;
    int idf_query_words = 3;
    bool stemming = false;
    bool include_hashtags = false;
    std::string stopwords_file;
};

void add_classifier_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--corpus", flags.corpus_path, "corpus file (JSON Lines)")
        ->required();
    cmd->add_option("--window-size", flags.window_size, "sliding window capacity");
    cmd->add_option("--classifier", flags.classifier, "nb, knn or hybrid")
        ->check(CLI::IsMember({"nb", "knn", "hybrid"}));
    cmd->add_option("--top-n", flags.top_n, "recommendations per post");
    cmd->add_option("--k", flags.k, "nearest neighbors");
    cmd->add_option("--nb-weight", flags.nb_weight, "hybrid weight of NB votes");
    cmd->add_option("--knn-weight", flags.knn_weight, "hybrid weight of KNN votes");
    cmd->add_option("--idf-query-words", flags.idf_query_words,
                    "query words used for candidate retrieval");
    cmd->add_flag("--stemming", flags.stemming, "enable Porter stemming");
    cmd->add_flag("--include-hashtags", flags.include_hashtags,
                  "keep hashtag tokens as feature words (ablation)");
    cmd->add_option("--stopwords-file", flags.stopwords_file,
                    "stop-word list override (or STREAMTAG_STOPWORDS)");
}

streamtag::Algorithm parse_algorithm(const std::string& name) {
    if (name == "nb") return streamtag::Algorithm::nb;
    if (name == "knn") return streamtag::Algorithm::knn;
    return streamtag::Algorithm::hybrid;
}

streamtag::ClassifierConfig classifier_config(const CommonFlags& flags) {
    streamtag::ClassifierConfig cfg;
    cfg.top_n = flags.top_n;
    cfg.knn_k = flags.k;
    cfg.nb_weight = flags.nb_weight;
    cfg.knn_weight = flags.knn_weight;
    cfg.idf_query_words = flags.idf_query_words;
    cfg.algorithm = parse_algorithm(flags.classifier);
    cfg.validate();
    return cfg;
}

streamtag::PreprocessConfig preprocess_config(const CommonFlags& flags) {
    streamtag::PreprocessConfig cfg;
    cfg.stemming = flags.stemming;
    cfg.include_hashtag_words = flags.include_hashtags;
    std::string path = flags.stopwords_file;
    if (path.empty()) {
        if (const char* env = std::getenv("STREAMTAG_STOPWORDS")) path = env;
    }
    if (!path.empty()) cfg.stopwords = streamtag::load_stopwords(path);
    return cfg;
}

// Fills the window from the head of the corpus; returns labeled posts pushed.
std::size_t fill_window(streamtag::CorpusReader& reader,
                        streamtag::ModelWindow& window,
                        const streamtag::PreprocessConfig& pcfg) {
    while (window.size() < window.capacity()) {
        auto raw = reader.next();
        if (!raw) break;
        streamtag::ProcessedPost pp = streamtag::preprocess(*raw, pcfg);
        if (pp.hashtags.empty()) continue;
        window.push(std::move(pp));
    }
    return window.size();
}

int cmd_gen(const std::string& spec_path, const std::string& out_path) {
    std::ifstream spec_in(spec_path);
    if (!spec_in) {
        std::cerr << "error: cannot open spec file: " << spec_path << "\n";
        return kExitIo;
    }
    std::stringstream buf;
    buf << spec_in.rdbuf();
    streamtag::GeneratorSpec spec;
    try {
        spec = streamtag::GeneratorSpec::from_json_text(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: invalid generator spec: " << e.what() << "\n";
        return kExitConfig;
    }
    try {
        streamtag::generate_corpus_file(spec, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_recommend(const CommonFlags& flags, const std::string& text) {
    streamtag::ClassifierConfig ccfg = classifier_config(flags);
    streamtag::PreprocessConfig pcfg = preprocess_config(flags);

    std::ifstream in(flags.corpus_path);
    if (!in) {
        std::cerr << "error: cannot open corpus: " << flags.corpus_path << "\n";
        return kExitIo;
    }
    streamtag::ModelWindow window(flags.window_size);
    streamtag::CorpusReader reader(in);
    if (fill_window(reader, window, pcfg) < window.capacity()) {
        std::cerr << "error: corpus holds fewer than " << window.capacity()
                  << " labeled posts\n";
        return kExitInsufficientData;
    }

    streamtag::Post query{"query", 0, text};
    streamtag::Recommendation rec =
        streamtag::recommend(window, query, ccfg, pcfg);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [tag, score] : rec.entries)
        out.push_back({{"hashtag", tag}, {"score", score}});
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_evaluate(const CommonFlags& flags, std::size_t eval_count, int threads,
                 const std::string& report_path, const std::string& log_path,
                 const std::string& dump_path) {
    streamtag::ClassifierConfig ccfg = classifier_config(flags);
    streamtag::PreprocessConfig pcfg = preprocess_config(flags);
    streamtag::EvalConfig ecfg;
    ecfg.window_capacity = flags.window_size;
    ecfg.eval_count = eval_count;
    ecfg.classifier = ccfg.algorithm;
    ecfg.thread_count = threads;
    ecfg.validate();

    std::ifstream in(flags.corpus_path);
    if (!in) {
        std::cerr << "error: cannot open corpus: " << flags.corpus_path << "\n";
        return kExitIo;
    }
    streamtag::ModelWindow window(ecfg.window_capacity);
    std::vector<streamtag::EvalRow> log;
    streamtag::EvalReport report = streamtag::run_evaluation(
        in, ecfg, ccfg, pcfg, window, log_path.empty() ? nullptr : &log);

    try {
        if (!report_path.empty()) streamtag::write_report(report, report_path);
        if (!log_path.empty()) streamtag::write_log_csv(log, log_path);
        if (!dump_path.empty()) {
            std::ofstream dump(dump_path);
            if (!dump) throw std::runtime_error("cannot open dump file: " + dump_path);
            dump << window.dump_json(2) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::cout << streamtag::report_to_json(report) << "\n";
    return kExitOk;
}

int cmd_bench(const CommonFlags& flags, std::size_t eval_count, int threads) {
    streamtag::ClassifierConfig ccfg = classifier_config(flags);
    streamtag::PreprocessConfig pcfg = preprocess_config(flags);

    std::ifstream in(flags.corpus_path);
    if (!in) {
        std::cerr << "error: cannot open corpus: " << flags.corpus_path << "\n";
        return kExitIo;
    }
    streamtag::ModelWindow window(flags.window_size);
    streamtag::BenchResult result =
        streamtag::run_bench(in, eval_count, ccfg, pcfg, window, threads);
    if (!result.window_filled) {
        std::cerr << "error: corpus holds fewer than " << window.capacity()
                  << " labeled posts\n";
        return kExitInsufficientData;
    }
    if (result.measured == 0) {
        std::cerr << "error: no labeled posts left after window fill\n";
        return kExitInsufficientData;
    }
    nlohmann::json out;
    out["posts_per_second"] = result.posts_per_second;
    out["p50_latency_ms"] = result.p50_latency_ms;
    out["p99_latency_ms"] = result.p99_latency_ms;
    std::cout << out.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming hashtag recommendation engine"};
    app.require_subcommand(1);

    // gen
    std::string spec_path, out_path;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic corpus");
    gen->add_option("--spec", spec_path, "generator spec (JSON)")->required();
    gen->add_option("--out", out_path, "output corpus path")->required();

    // recommend
    CommonFlags rec_flags;
    std::string text;
    CLI::App* rec = app.add_subcommand("recommend", "recommend for one post");
    add_classifier_flags(rec, rec_flags);
    rec->add_option("--text", text, "raw post text")->required();

    // evaluate
    CommonFlags eval_flags;
    std::size_t eval_count = 1000;
    int eval_threads = 1;
    std::string report_path, log_path, dump_path;
    CLI::App* eval = app.add_subcommand("evaluate", "replay evaluation");
    add_classifier_flags(eval, eval_flags);
    eval->add_option("--eval-count", eval_count, "posts to evaluate");
    eval->add_option("--threads", eval_threads, "recommendation workers");
    eval->add_option("--report", report_path, "write report JSON here");
    eval->add_option("--log", log_path, "write per-post CSV log here");
    eval->add_option("--dump-model", dump_path, "write final window dump here");

    // bench
    CommonFlags bench_flags;
    std::size_t bench_count = 1000;
    int bench_threads = 1;
    CLI::App* bench = app.add_subcommand("bench", "throughput benchmark");
    add_classifier_flags(bench, bench_flags);
    bench->add_option("--eval-count", bench_count, "posts to measure");
    bench->add_option("--threads", bench_threads, "classification workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (gen->parsed()) return cmd_gen(spec_path, out_path);
        if (rec->parsed()) return cmd_recommend(rec_flags, text);
        if (eval->parsed())
            return cmd_evaluate(eval_flags, eval_count, eval_threads, report_path,
                                log_path, dump_path);
        if (bench->parsed()) return cmd_bench(bench_flags, bench_count, bench_threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitConfig;
}
