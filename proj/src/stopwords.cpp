#include "streamtag/preprocess.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace streamtag {

namespace {

// Built-in copy of data/stopwords_en.txt: 175 common English words plus
// "rt" and "via". Keep the two in sync; a unit test compares them.
const char* const kDefaultStopwords[] = {
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "all",
    "also",
    "an",
    "and",
    "another",
    "any",
    "are",
    "around",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "cannot",
    "come",
    "could",
    "did",
    "do",
    "does",
    "doing",
    "down",
    "during",
    "each",
    "even",
    "every",
    "few",
    "for",
    "from",
    "get",
    "go",
    "going",
    "got",
    "had",
    "has",
    "have",
    "having",
    "he",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "however",
    "if",
    "in",
    "into",
    "is",
    "it",
    "its",
    "itself",
    "just",
    "let",
    "like",
    "me",
    "more",
    "most",
    "much",
    "my",
    "myself",
    "near",
    "need",
    "never",
    "new",
    "next",
    "no",
    "nor",
    "not",
    "now",
    "of",
    "off",
    "often",
    "old",
    "on",
    "once",
    "one",
    "only",
    "onto",
    "or",
    "other",
    "our",
    "ours",
    "out",
    "over",
    "own",
    "part",
    "put",
    "rather",
    "said",
    "same",
    "saw",
    "say",
    "see",
    "seem",
    "she",
    "should",
    "since",
    "so",
    "some",
    "still",
    "such",
    "take",
    "than",
    "that",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "these",
    "they",
    "thing",
    "think",
    "this",
    "those",
    "through",
    "thus",
    "to",
    "together",
    "too",
    "took",
    "toward",
    "under",
    "until",
    "up",
    "upon",
    "us",
    "use",
    "used",
    "very",
    "want",
    "was",
    "way",
    "we",
    "well",
    "went",
    "were",
    "what",
    "when",
    "where",
    "whether",
    "which",
    "while",
    "who",
    "whom",
    "whose",
    "why",
    "will",
    "with",
    "within",
    "without",
    "would",
    "yet",
    "you",
    "your",
    "yours",
    "yourself",
    "rt",
    "via",
};

}  // namespace

bool StopwordList::contains(const std::string& word) const {
    return words.count(word) != 0;
}

std::shared_ptr<const StopwordList> default_stopwords() {
    static const std::shared_ptr<const StopwordList> list = [] {
        auto l = std::make_shared<StopwordList>();
        for (const char* w : kDefaultStopwords) l->words.insert(w);
        return l;
    }();
    return list;
}

std::shared_ptr<const StopwordList> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open stop-word file: " + path);
    auto list = std::make_shared<StopwordList>();
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        list->words.insert(line);
    }
    return list;
}

}  // namespace streamtag
