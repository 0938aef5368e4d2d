#include "streamtag/porter.hpp"

#include <array>
#include <cstddef>

// Porter's 1980 suffix stripper, implemented from the original definition.
// Within each step only the longest matching suffix is considered; if its
// condition fails the step simply does not fire. Getting that wrong (e.g.
// falling back from EED to ED) changes outputs like "feed".

namespace streamtag {

namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Consonant per Porter: not a/e/i/o/u, and 'y' only when not preceded by a
// consonant.
bool is_cons(const std::string& w, std::size_t i) {
    char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_cons(w, i - 1);
    return true;
}

// Number of VC sequences in w[0..len): [C](VC)^m[V].
int measure(const std::string& w, std::size_t len) {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_cons(w, i)) ++i;
    for (;;) {
        while (i < len && !is_cons(w, i)) ++i;
        if (i >= len) break;
        while (i < len && is_cons(w, i)) ++i;
        ++m;
    }
    return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_cons(w, i)) return true;
    return false;
}

// *d: ends with a double consonant.
bool ends_double_cons(const std::string& w, std::size_t len) {
    return len >= 2 && w[len - 1] == w[len - 2] && is_cons(w, len - 1);
}

// *o: ends cvc where the final consonant is not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_cons(w, len - 3) || is_cons(w, len - 2) || !is_cons(w, len - 1))
        return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, const char* suffix, std::size_t n) {
    return w.size() >= n && w.compare(w.size() - n, n, suffix) == 0;
}

struct rule {
    const char* suffix;
    const char* replacement;
    int min_measure;  // condition: measure(stem) > min_measure - 1
};

// Applies the longest matching rule whose measure condition holds on the
// stem. Returns true if a suffix matched (even when the condition failed).
bool apply_table(std::string& w, const rule* rules, std::size_t count) {
    const rule* best = nullptr;
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < count; ++r) {
        std::size_t n = std::char_traits<char>::length(rules[r].suffix);
        if (n > best_len && ends_with(w, rules[r].suffix, n)) {
            best = &rules[r];
            best_len = n;
        }
    }
    if (!best) return false;
    std::size_t stem_len = w.size() - best_len;
    if (measure(w, stem_len) >= best->min_measure) {
        w.resize(stem_len);
        w.append(best->replacement);
    }
    return true;
}

void step1a(std::string& w) {
    if (ends_with(w, "sses", 4)) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies", 3)) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ss", 2)) {
        // keep
    } else if (ends_with(w, "s", 1)) {
        w.resize(w.size() - 1);
    }
}

void step1b(std::string& w) {
    if (ends_with(w, "eed", 3)) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed", 2) && has_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing", 3) && has_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;
    if (ends_with(w, "at", 2) || ends_with(w, "bl", 2) || ends_with(w, "iz", 2)) {
        w.push_back('e');
    } else if (ends_double_cons(w, w.size())) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.resize(w.size() - 1);
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y", 1) && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

const rule kStep2[] = {
    {"ational", "ate", 1}, {"tional", "tion", 1}, {"enci", "ence", 1},
    {"anci", "ance", 1},   {"izer", "ize", 1},    {"abli", "able", 1},
    {"alli", "al", 1},     {"entli", "ent", 1},   {"eli", "e", 1},
    {"ousli", "ous", 1},   {"ization", "ize", 1}, {"ation", "ate", 1},
    {"ator", "ate", 1},    {"alism", "al", 1},    {"iveness", "ive", 1},
    {"fulness", "ful", 1}, {"ousness", "ous", 1}, {"aliti", "al", 1},
    {"iviti", "ive", 1},   {"biliti", "ble", 1},
};

const rule kStep3[] = {
    {"icate", "ic", 1}, {"ative", "", 1}, {"alize", "al", 1},
    {"iciti", "ic", 1}, {"ical", "ic", 1}, {"ful", "", 1},
    {"ness", "", 1},
};

const rule kStep4[] = {
    {"al", "", 2},    {"ance", "", 2}, {"ence", "", 2}, {"er", "", 2},
    {"ic", "", 2},    {"able", "", 2}, {"ible", "", 2}, {"ant", "", 2},
    {"ement", "", 2}, {"ment", "", 2}, {"ent", "", 2},  {"ou", "", 2},
    {"ism", "", 2},   {"ate", "", 2},  {"iti", "", 2},  {"ous", "", 2},
    {"ive", "", 2},   {"ize", "", 2},
};

void step4(std::string& w) {
    // ION carries an extra condition (stem must end in s or t). No other
    // step-4 suffix can co-terminate with "ion", so it never shadows one.
    if (ends_with(w, "ion", 3)) {
        std::size_t stem_len = w.size() - 3;
        if (stem_len >= 1 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't') &&
            measure(w, stem_len) > 1) {
            w.resize(stem_len);
        }
        return;
    }
    apply_table(w, kStep4, std::size(kStep4));
}

void step5a(std::string& w) {
    if (!ends_with(w, "e", 1)) return;
    int m = measure(w, w.size());
    if (m > 1 || (m == 1 && !ends_cvc(w, w.size() - 1))) w.resize(w.size() - 1);
}

void step5b(std::string& w) {
    if (ends_with(w, "l", 1) && ends_double_cons(w, w.size()) &&
        measure(w, w.size()) > 1) {
        w.resize(w.size() - 1);
    }
}

}  // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    for (char c : w)
        if (c < 'a' || c > 'z') return w;

    step1a(w);
    step1b(w);
    step1c(w);
    apply_table(w, kStep2, std::size(kStep2));
    apply_table(w, kStep3, std::size(kStep3));
    step4(w);
    step5a(w);
    step5b(w);
    return w;
}

}  // namespace streamtag
