#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "streamtag/detail/persistent_map.hpp"
#include "streamtag/types.hpp"

namespace streamtag {

// Per-term counters, sufficient to compute IDF, TCoR and the Bayes
// estimates in constant time. A term is any feature word or mention.
struct WordStats {
    std::int64_t doc_freq = 0;    // posts in the window containing the term
    std::int64_t length_sum = 0;  // sum of word_count over those posts
    detail::persistent_map<std::string, std::int32_t> cooc;  // hashtag -> posts with both
    detail::persistent_map<std::string, PostPtr> postings;   // post id -> post

    std::int64_t cooccurring_hashtags() const {
        return static_cast<std::int64_t>(cooc.size());
    }
};

struct HashtagStats {
    std::int64_t post_count = 0;  // posts in the window labeled with the hashtag
};

// A consistent point-in-time view of the window. All structures are
// immutable and structurally shared, so holding a snapshot costs nothing
// beyond keeping its nodes alive, and reads never block anything.
class Snapshot {
public:
    std::int64_t total_posts() const { return total_posts_; }

    const WordStats* word(const std::string& term) const {
        return words_.get(term);
    }
    const HashtagStats* hashtag(const std::string& tag) const {
        return hashtags_.get(tag);
    }
    PostPtr post(const std::string& id) const {
        const PostPtr* p = posts_.get(id);
        return p ? *p : nullptr;
    }

    std::size_t word_entry_count() const { return words_.size(); }
    std::size_t hashtag_entry_count() const { return hashtags_.size(); }

    template <class F>
    void for_each_word(F&& f) const {
        words_.for_each(f);
    }
    template <class F>
    void for_each_hashtag(F&& f) const {
        hashtags_.for_each(f);
    }

private:
    friend class ModelWindow;
    detail::persistent_map<std::string, WordStats> words_;
    detail::persistent_map<std::string, HashtagStats> hashtags_;
    detail::persistent_map<std::string, PostPtr> posts_;
    std::int64_t total_posts_ = 0;
};

using SnapshotPtr = std::shared_ptr<const Snapshot>;

// Fixed-capacity FIFO of labeled posts plus incrementally maintained
// word/hashtag statistics. Single writer (push), any number of concurrent
// readers via snapshot().
class ModelWindow {
public:
    enum class PushStatus { accepted, rejected_unlabeled, rejected_duplicate_id };
    struct PushResult {
        PushStatus status = PushStatus::accepted;
        PostPtr evicted;  // set when the push displaced the oldest post
        bool accepted() const { return status == PushStatus::accepted; }
    };

    // capacity must be >= 1.
    explicit ModelWindow(std::size_t capacity);

    // Appends the post and evicts the oldest one once the window is full.
    // Posts without hashtags carry no class label and are rejected, as are
    // posts whose id is already present (they would corrupt the postings).
    // Amortized cost is proportional to the post's term and hashtag counts.
    PushResult push(ProcessedPost post);

    // Latest published consistent view. Never blocks other readers; a push
    // in flight is not yet visible.
    SnapshotPtr snapshot() const;

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return fifo_.size(); }

    // Exact postings for a term; empty for unknown terms. Sorted for
    // deterministic output.
    std::vector<std::string> posts_containing(const std::string& term) const;

    // Debug dump: {"capacity": N, "posts": [...]} in FIFO order. Statistics
    // are always derivable from the posts, never serialized. Writer-thread
    // operation.
    std::string dump_json(int indent = -1) const;

private:
    void apply_insert(const PostPtr& p);
    void apply_remove(const PostPtr& p);
    void publish();

    std::size_t capacity_;
    std::deque<PostPtr> fifo_;  // writer-owned
    Snapshot state_;            // writer-owned working copy

    mutable std::mutex publish_mutex_;
    SnapshotPtr published_;
};

}  // namespace streamtag
