#include "streamtag/window.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace streamtag {

ModelWindow::ModelWindow(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0)
        throw std::invalid_argument("ModelWindow: capacity must be >= 1");
    publish();
}

void ModelWindow::apply_insert(const PostPtr& p) {
    for (const auto& term : p->terms) {
        WordStats ws;
        if (const WordStats* cur = state_.words_.get(term)) ws = *cur;
        ws.doc_freq += 1;
        ws.length_sum += p->word_count;
        ws.postings.set(p->id, p);
        for (const auto& tag : p->hashtags) {
            const std::int32_t* c = ws.cooc.get(tag);
            ws.cooc.set(tag, c ? *c + 1 : 1);
        }
        state_.words_.set(term, std::move(ws));
    }
    for (const auto& tag : p->hashtags) {
        HashtagStats hs;
        if (const HashtagStats* cur = state_.hashtags_.get(tag)) hs = *cur;
        hs.post_count += 1;
        state_.hashtags_.set(tag, hs);
    }
    state_.posts_.set(p->id, p);
}

void ModelWindow::apply_remove(const PostPtr& p) {
    for (const auto& term : p->terms) {
        const WordStats* cur = state_.words_.get(term);
        WordStats ws = *cur;
        ws.doc_freq -= 1;
        ws.length_sum -= p->word_count;
        ws.postings.erase(p->id);
        for (const auto& tag : p->hashtags) {
            const std::int32_t* c = ws.cooc.get(tag);
            if (*c <= 1)
                ws.cooc.erase(tag);
            else
                ws.cooc.set(tag, *c - 1);
        }
        if (ws.doc_freq == 0)
            state_.words_.erase(term);
        else
            state_.words_.set(term, std::move(ws));
    }
    for (const auto& tag : p->hashtags) {
        const HashtagStats* cur = state_.hashtags_.get(tag);
        if (cur->post_count <= 1) {
            state_.hashtags_.erase(tag);
        } else {
            state_.hashtags_.set(tag, HashtagStats{cur->post_count - 1});
        }
    }
    state_.posts_.erase(p->id);
}

void ModelWindow::publish() {
    auto snap = std::make_shared<const Snapshot>(state_);
    std::lock_guard<std::mutex> lock(publish_mutex_);
    published_ = std::move(snap);
}

ModelWindow::PushResult ModelWindow::push(ProcessedPost post) {
    if (post.hashtags.empty())
        return {PushStatus::rejected_unlabeled, nullptr};
    if (state_.posts_.contains(post.id))
        return {PushStatus::rejected_duplicate_id, nullptr};

    auto p = std::make_shared<const ProcessedPost>(std::move(post));
    apply_insert(p);
    fifo_.push_back(p);

    PostPtr evicted;
    if (fifo_.size() > capacity_) {
        evicted = fifo_.front();
        fifo_.pop_front();
        apply_remove(evicted);
    }
    state_.total_posts_ = static_cast<std::int64_t>(fifo_.size());
    publish();
    return {PushStatus::accepted, evicted};
}

SnapshotPtr ModelWindow::snapshot() const {
    std::lock_guard<std::mutex> lock(publish_mutex_);
    return published_;
}

std::vector<std::string> ModelWindow::posts_containing(const std::string& term) const {
    SnapshotPtr snap = snapshot();
    std::vector<std::string> ids;
    if (const WordStats* ws = snap->word(term)) {
        ids.reserve(ws->postings.size());
        ws->postings.for_each(
            [&](const std::string& id, const PostPtr&) { ids.push_back(id); });
        std::sort(ids.begin(), ids.end());
    }
    return ids;
}

std::string ModelWindow::dump_json(int indent) const {
    nlohmann::json doc;
    doc["capacity"] = capacity_;
    nlohmann::json posts = nlohmann::json::array();
    for (const PostPtr& p : fifo_) {
        posts.push_back({{"id", p->id},
                         {"words", p->words},
                         {"mentions", p->mentions},
                         {"hashtags", p->hashtags},
                         {"word_count", p->word_count}});
    }
    doc["posts"] = std::move(posts);
    return doc.dump(indent);
}

}  // namespace streamtag
