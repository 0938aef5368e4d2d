#include "streamtag/preprocess.hpp"

#include <algorithm>

#include "streamtag/detail/unicode.hpp"
#include "streamtag/porter.hpp"

namespace streamtag {

namespace uc = unicode;

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0, len = 0;
    while (i < text.size()) {
        char32_t cp = uc::decode(text, i, len);
        if (uc::is_space(cp)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.append(text.substr(i, len));
        }
        i += len;
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    return out;
}

// Lowercases and deletes punctuation (apostrophes vanish rather than split
// the token). Replacement characters from malformed UTF-8 are dropped too.
std::string clean_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    std::size_t i = 0, len = 0;
    while (i < token.size()) {
        char32_t cp = uc::decode(token, i, len);
        i += len;
        if (uc::is_punct(cp) || cp == uc::kReplacement) continue;
        uc::append(out, uc::to_lower(cp));
    }
    return out;
}

// Mentions keep their '@' and interior characters; only trailing
// punctuation is removed.
std::string clean_mention(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    std::size_t i = 0, len = 0;
    while (i < token.size()) {
        char32_t cp = uc::decode(token, i, len);
        i += len;
        uc::append(out, uc::to_lower(cp));
    }
    for (;;) {
        std::size_t last_start = 0, last_len = 0;
        char32_t last_cp = 0;
        std::size_t i2 = 0;
        while (i2 < out.size()) {
            last_start = i2;
            last_cp = uc::decode(out, i2, last_len);
            i2 += last_len;
        }
        if (out.empty() ||
            (!uc::is_punct(last_cp) && last_cp != uc::kReplacement))
            break;
        out.resize(last_start);
    }
    return out;
}

bool is_url_token(const std::string& lower) {
    return lower.rfind("http://", 0) == 0 || lower.rfind("https://", 0) == 0 ||
           lower.rfind("www.", 0) == 0;
}

bool all_ascii_digits(const std::string& w) {
    for (char c : w)
        if (c < '0' || c > '9') return false;
    return !w.empty();
}

}  // namespace

ProcessedPost preprocess(const Post& post, const PreprocessConfig& config) {
    ProcessedPost out;
    out.id = post.id;

    std::vector<std::string> word_tokens;
    for (std::string& token : tokenize(post.text)) {
        if (token[0] == '#') {
            std::size_t body = token.find_first_not_of('#');
            if (body == std::string::npos) continue;
            std::string tag = clean_token(std::string_view(token).substr(body));
            if (tag.empty()) continue;
            out.hashtags.push_back(tag);
            if (config.include_hashtag_words) word_tokens.push_back(std::move(tag));
            continue;
        }
        if (token[0] == '@') {
            std::string mention = clean_mention(token);
            if (mention.size() > 1) out.mentions.push_back(std::move(mention));
            continue;
        }
        if (is_url_token(ascii_lower(token))) continue;
        std::string word = clean_token(token);
        if (!word.empty()) word_tokens.push_back(std::move(word));
    }

    std::sort(out.hashtags.begin(), out.hashtags.end());
    out.hashtags.erase(std::unique(out.hashtags.begin(), out.hashtags.end()),
                       out.hashtags.end());

    const StopwordList* stop = config.stopwords.get();
    for (std::string& word : word_tokens) {
        if (stop && stop->contains(word)) continue;
        if (uc::length(word) < static_cast<std::size_t>(config.min_word_length))
            continue;
        if (all_ascii_digits(word)) continue;
        // Stripping punctuation can leave a url fragment without its "://";
        // the words list must stay free of link residue.
        if (word.rfind("http", 0) == 0 || word.rfind("www.", 0) == 0) continue;
        std::string final_form =
            config.stemming ? porter_stem(word) : std::move(word);
        // Hashtags are class labels, not features; the check runs on the
        // final form so stemming cannot reintroduce a label into the words.
        if (!config.include_hashtag_words &&
            std::binary_search(out.hashtags.begin(), out.hashtags.end(),
                               final_form))
            continue;
        out.words.push_back(std::move(final_form));
    }

    finalize_post(out);
    return out;
}

}  // namespace streamtag
