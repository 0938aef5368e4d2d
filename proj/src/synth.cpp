#include "streamtag/synth.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "streamtag/preprocess.hpp"

namespace streamtag {

namespace {

constexpr char kConsonants[] = "bdfgklmnprstvz";  // 14
constexpr char kVowels[] = "aeiou";               // 5
constexpr int kSyllables = 14 * 5;
constexpr int kLexiconCapacity = kSyllables * kSyllables * kSyllables;

std::string lexicon_word(int k) {
    std::string w;
    w.reserve(6);
    for (int part = 2; part >= 0; --part) {
        int s = k;
        for (int i = 0; i < part; ++i) s /= kSyllables;
        s %= kSyllables;
        w.push_back(kConsonants[s / 5]);
        w.push_back(kVowels[s % 5]);
    }
    return w;
}

// Word k of the filtered lexicon: enumeration order with stop-word
// collisions skipped, so generated words always survive preprocessing.
std::vector<std::string> build_lexicon(int count) {
    const auto stop = default_stopwords();
    std::vector<std::string> words;
    words.reserve(count);
    for (int k = 0; k < kLexiconCapacity && static_cast<int>(words.size()) < count;
         ++k) {
        std::string w = lexicon_word(k);
        if (stop->contains(w)) continue;
        words.push_back(std::move(w));
    }
    if (static_cast<int>(words.size()) < count)
        throw std::invalid_argument("generator vocabulary exceeds lexicon capacity");
    return words;
}

// Uniform draw in [0, n); pinned to mt19937_64 output so corpora are
// byte-identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void GeneratorSpec::validate() const {
    if (num_hashtags < 1) throw std::invalid_argument("num_hashtags must be >= 1");
    if (signature_words_per_hashtag < 1)
        throw std::invalid_argument("signature_words_per_hashtag must be >= 1");
    if (noise_vocab_size < 1)
        throw std::invalid_argument("noise_vocab_size must be >= 1");
    if (words_per_post_min < 1 || words_per_post_max < words_per_post_min)
        throw std::invalid_argument("invalid words_per_post range");
    if (posts < 1) throw std::invalid_argument("posts must be >= 1");
    if (!(noise_word_probability >= 0.0 && noise_word_probability <= 1.0))
        throw std::invalid_argument("noise_word_probability must be in [0, 1]");
    const long long needed =
        static_cast<long long>(num_hashtags) * (1 + signature_words_per_hashtag) +
        noise_vocab_size;
    if (needed > kLexiconCapacity)
        throw std::invalid_argument(
            "vocabulary too large for disjoint signature sets");
}

GeneratorSpec GeneratorSpec::from_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("generator spec: not an object");
    GeneratorSpec spec;
    for (const auto& [key, value] : doc.items()) {
        if (key == "seed") spec.seed = value.get<std::uint64_t>();
        else if (key == "num_hashtags") spec.num_hashtags = value.get<int>();
        else if (key == "signature_words_per_hashtag")
            spec.signature_words_per_hashtag = value.get<int>();
        else if (key == "noise_vocab_size") spec.noise_vocab_size = value.get<int>();
        else if (key == "words_per_post_min")
            spec.words_per_post_min = value.get<int>();
        else if (key == "words_per_post_max")
            spec.words_per_post_max = value.get<int>();
        else if (key == "posts") spec.posts = value.get<std::uint64_t>();
        else if (key == "noise_word_probability")
            spec.noise_word_probability = value.get<double>();
        else if (key == "echo_hashtag_in_text")
            spec.echo_hashtag_in_text = value.get<bool>();
        else
            throw std::invalid_argument("generator spec: unknown key \"" + key + "\"");
    }
    spec.validate();
    return spec;
}

SyntheticLexicon::SyntheticLexicon(const GeneratorSpec& spec)
    : sig_per_tag_(spec.signature_words_per_hashtag) {
    const int total = spec.num_hashtags * (1 + spec.signature_words_per_hashtag) +
                      spec.noise_vocab_size;
    std::vector<std::string> words = build_lexicon(total);
    auto it = words.begin();
    hashtags_.assign(it, it + spec.num_hashtags);
    it += spec.num_hashtags;
    signatures_.assign(it, it + spec.num_hashtags * spec.signature_words_per_hashtag);
    it += spec.num_hashtags * spec.signature_words_per_hashtag;
    noise_.assign(it, words.end());
}

const std::string& SyntheticLexicon::signature_word(int tag, int j) const {
    return signatures_.at(static_cast<std::size_t>(tag) * sig_per_tag_ + j);
}

void generate_corpus(const GeneratorSpec& spec, std::ostream& out) {
    spec.validate();
    SyntheticLexicon lexicon(spec);
    std::mt19937_64 rng(spec.seed);

    for (std::uint64_t i = 0; i < spec.posts; ++i) {
        const int tag = static_cast<int>(bounded(rng, spec.num_hashtags));
        const int span = spec.words_per_post_max - spec.words_per_post_min + 1;
        const int word_count =
            spec.words_per_post_min + static_cast<int>(bounded(rng, span));

        std::string text;
        for (int w = 0; w < word_count; ++w) {
            if (w) text.push_back(' ');
            if (unit_real(rng) < spec.noise_word_probability) {
                text += lexicon.noise_word(
                    static_cast<int>(bounded(rng, spec.noise_vocab_size)));
            } else {
                text += lexicon.signature_word(
                    tag, static_cast<int>(
                             bounded(rng, spec.signature_words_per_hashtag)));
            }
        }
        if (spec.echo_hashtag_in_text) {
            text.push_back(' ');
            text += lexicon.hashtag(tag);
        }
        text += " #";
        text += lexicon.hashtag(tag);

        nlohmann::json line;
        line["id"] = std::to_string(i);
        line["timestamp"] = i;
        line["text"] = text;
        out << line.dump() << '\n';
    }
}

void generate_corpus_file(const GeneratorSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    generate_corpus(spec, out);
    if (!out) throw std::runtime_error("failed writing corpus: " + path);
}

}  // namespace streamtag
