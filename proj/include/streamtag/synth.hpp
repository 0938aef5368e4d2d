#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace streamtag {

// Parameters of the deterministic labeled-corpus generator. Signature
// vocabularies of distinct hashtags are disjoint by construction, and no
// generated word collides with the built-in stop-word list.
struct GeneratorSpec {
    std::uint64_t seed = 0;
    int num_hashtags = 1;
    int signature_words_per_hashtag = 3;
    int noise_vocab_size = 1;
    int words_per_post_min = 1;
    int words_per_post_max = 1;
    std::uint64_t posts = 1;
    double noise_word_probability = 0.0;
    // When set, the post's hashtag token is also emitted as a plain feature
    // word, modeling posts whose tag is part of the content.
    bool echo_hashtag_in_text = false;

    void validate() const;  // throws std::invalid_argument

    // Parses the JSON config form; unknown keys rejected.
    static GeneratorSpec from_json_text(const std::string& text);
};

// Deterministic lexicon backing the generator: pronounceable 6-letter
// syllable triples, enumerated with stop-word collisions skipped. Exposed
// for tests and for building query posts that match a generated corpus.
class SyntheticLexicon {
public:
    SyntheticLexicon(const GeneratorSpec& spec);

    const std::string& hashtag(int i) const { return hashtags_.at(i); }
    const std::string& signature_word(int tag, int j) const;
    const std::string& noise_word(int i) const { return noise_.at(i); }
    int num_hashtags() const { return static_cast<int>(hashtags_.size()); }

private:
    int sig_per_tag_;
    std::vector<std::string> hashtags_;
    std::vector<std::string> signatures_;  // tag-major
    std::vector<std::string> noise_;
};

// Writes spec.posts JSON Lines to `out`; byte-identical for equal specs.
void generate_corpus(const GeneratorSpec& spec, std::ostream& out);

// Convenience: generate into a file. Throws std::runtime_error on I/O
// failure with the path in the message.
void generate_corpus_file(const GeneratorSpec& spec, const std::string& path);

}  // namespace streamtag
