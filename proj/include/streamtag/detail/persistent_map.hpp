#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace streamtag::detail {

// Immutable hash-array-mapped trie with copy-on-write updates.
//
// The window's statistics maps must stay readable from snapshots while the
// single writer keeps pushing, so updates never touch published nodes: set()
// and erase() copy the path from the root and share everything else. Copying
// the map itself is two pointer copies, which is what makes per-push snapshot
// publication affordable.
//
// Not a general-purpose container: no iterators (visit with for_each), keys
// and values are stored by value, and the writer must be a single thread.
// Concurrent readers of published roots are safe because nodes are immutable
// after publication.
template <class K, class V, class Hash = std::hash<K>>
class persistent_map {
    static constexpr unsigned kBits = 5;
    static constexpr unsigned kMaxShift = 60;  // beyond this, hash bits are spent

    struct node {
        std::uint32_t datamap = 0;  // slots holding an inline entry
        std::uint32_t nodemap = 0;  // slots holding a child node
        std::vector<std::pair<K, V>> data;
        std::vector<std::shared_ptr<const node>> children;
        // Entries whose full 64-bit hashes collide; only ever non-empty in
        // nodes hanging below kMaxShift.
        std::vector<std::pair<K, V>> collisions;
    };
    using node_ptr = std::shared_ptr<const node>;

public:
    persistent_map() = default;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    const V* get(const K& key) const {
        if (!root_) return nullptr;
        std::uint64_t h = Hash{}(key);
        const node* n = root_.get();
        unsigned shift = 0;
        for (;;) {
            if (shift > kMaxShift) {
                for (const auto& kv : n->collisions)
                    if (kv.first == key) return &kv.second;
                return nullptr;
            }
            const std::uint32_t bit = slot_bit(h, shift);
            if (n->datamap & bit) {
                const auto& kv = n->data[data_index(*n, bit)];
                return kv.first == key ? &kv.second : nullptr;
            }
            if (n->nodemap & bit) {
                n = n->children[node_index(*n, bit)].get();
                shift += kBits;
                continue;
            }
            return nullptr;
        }
    }

    bool contains(const K& key) const { return get(key) != nullptr; }

    // Inserts or replaces. Returns true when the key was new.
    bool set(const K& key, V val) {
        bool added = false;
        if (!root_) {
            auto n = std::make_shared<node>();
            n->datamap = slot_bit(Hash{}(key), 0);
            n->data.emplace_back(key, std::move(val));
            root_ = std::move(n);
            added = true;
        } else {
            root_ = insert_into(*root_, 0, Hash{}(key), key, std::move(val), added);
        }
        if (added) ++size_;
        return added;
    }

    // Removes the key if present; returns whether anything was removed.
    bool erase(const K& key) {
        if (!root_) return false;
        bool removed = false;
        node_ptr r = erase_from(*root_, 0, Hash{}(key), key, removed);
        if (!removed) return false;
        if (r && r->datamap == 0 && r->nodemap == 0 && r->collisions.empty())
            r = nullptr;
        root_ = std::move(r);
        --size_;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        if (root_) visit(*root_, f);
    }

private:
    static std::uint32_t slot_bit(std::uint64_t h, unsigned shift) {
        return 1u << ((h >> shift) & 31u);
    }
    static unsigned data_index(const node& n, std::uint32_t bit) {
        return std::popcount(n.datamap & (bit - 1));
    }
    static unsigned node_index(const node& n, std::uint32_t bit) {
        return std::popcount(n.nodemap & (bit - 1));
    }

    // Builds the smallest subtree holding two entries that shared a slot.
    static node_ptr make_pair_node(unsigned shift, std::uint64_t h0,
                                   std::pair<K, V> kv0, std::uint64_t h1,
                                   std::pair<K, V> kv1) {
        auto n = std::make_shared<node>();
        if (shift > kMaxShift) {
            n->collisions.push_back(std::move(kv0));
            n->collisions.push_back(std::move(kv1));
            return n;
        }
        const std::uint32_t b0 = slot_bit(h0, shift);
        const std::uint32_t b1 = slot_bit(h1, shift);
        if (b0 != b1) {
            n->datamap = b0 | b1;
            if (b0 < b1) {
                n->data.push_back(std::move(kv0));
                n->data.push_back(std::move(kv1));
            } else {
                n->data.push_back(std::move(kv1));
                n->data.push_back(std::move(kv0));
            }
        } else {
            n->nodemap = b0;
            n->children.push_back(make_pair_node(shift + kBits, h0, std::move(kv0),
                                                 h1, std::move(kv1)));
        }
        return n;
    }

    static node_ptr insert_into(const node& n, unsigned shift, std::uint64_t h,
                                const K& key, V val, bool& added) {
        if (shift > kMaxShift) {
            auto copy = std::make_shared<node>(n);
            for (auto& kv : copy->collisions) {
                if (kv.first == key) {
                    kv.second = std::move(val);
                    return copy;
                }
            }
            copy->collisions.emplace_back(key, std::move(val));
            added = true;
            return copy;
        }
        const std::uint32_t bit = slot_bit(h, shift);
        if (n.datamap & bit) {
            const unsigned di = data_index(n, bit);
            auto copy = std::make_shared<node>(n);
            if (n.data[di].first == key) {
                copy->data[di].second = std::move(val);
                return copy;
            }
            std::pair<K, V> old = copy->data[di];
            copy->data.erase(copy->data.begin() + di);
            copy->datamap &= ~bit;
            // Hash before the call below: the argument move would otherwise
            // race the hash evaluation (argument order is unspecified).
            const std::uint64_t old_hash = Hash{}(old.first);
            node_ptr child = make_pair_node(shift + kBits, old_hash, std::move(old),
                                            h, {key, std::move(val)});
            copy->children.insert(copy->children.begin() + node_index(n, bit),
                                  std::move(child));
            copy->nodemap |= bit;
            added = true;
            return copy;
        }
        if (n.nodemap & bit) {
            const unsigned ni = node_index(n, bit);
            node_ptr child =
                insert_into(*n.children[ni], shift + kBits, h, key, std::move(val), added);
            auto copy = std::make_shared<node>(n);
            copy->children[ni] = std::move(child);
            return copy;
        }
        auto copy = std::make_shared<node>(n);
        copy->data.insert(copy->data.begin() + data_index(n, bit),
                          {key, std::move(val)});
        copy->datamap |= bit;
        added = true;
        return copy;
    }

    // A non-root node holding exactly one entry gets inlined into its parent,
    // which keeps the trie canonical and releases memory promptly on erase.
    static bool is_singleton(const node& n) {
        if (!n.children.empty()) return false;
        return n.data.size() + n.collisions.size() == 1;
    }
    static const std::pair<K, V>& singleton_entry(const node& n) {
        return n.data.empty() ? n.collisions.front() : n.data.front();
    }

    static node_ptr erase_from(const node& n, unsigned shift, std::uint64_t h,
                               const K& key, bool& removed) {
        if (shift > kMaxShift) {
            for (std::size_t i = 0; i < n.collisions.size(); ++i) {
                if (n.collisions[i].first == key) {
                    auto copy = std::make_shared<node>(n);
                    copy->collisions.erase(copy->collisions.begin() +
                                           static_cast<std::ptrdiff_t>(i));
                    removed = true;
                    return copy;
                }
            }
            return nullptr;
        }
        const std::uint32_t bit = slot_bit(h, shift);
        if (n.datamap & bit) {
            const unsigned di = data_index(n, bit);
            if (!(n.data[di].first == key)) return nullptr;
            auto copy = std::make_shared<node>(n);
            copy->data.erase(copy->data.begin() + di);
            copy->datamap &= ~bit;
            removed = true;
            return copy;
        }
        if (n.nodemap & bit) {
            const unsigned ni = node_index(n, bit);
            node_ptr child = erase_from(*n.children[ni], shift + kBits, h, key, removed);
            if (!removed) return nullptr;
            auto copy = std::make_shared<node>(n);
            if (is_singleton(*child)) {
                copy->children.erase(copy->children.begin() + ni);
                copy->nodemap &= ~bit;
                copy->data.insert(copy->data.begin() + data_index(n, bit),
                                  singleton_entry(*child));
                copy->datamap |= bit;
            } else {
                copy->children[ni] = std::move(child);
            }
            return copy;
        }
        return nullptr;
    }

    template <class F>
    static void visit(const node& n, F& f) {
        for (const auto& kv : n.data) f(kv.first, kv.second);
        for (const auto& kv : n.collisions) f(kv.first, kv.second);
        for (const auto& c : n.children) visit(*c, f);
    }

    node_ptr root_;
    std::size_t size_ = 0;
};

}  // namespace streamtag::detail
