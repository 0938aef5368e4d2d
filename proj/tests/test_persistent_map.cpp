#include <doctest.h>

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamtag/detail/persistent_map.hpp"

using streamtag::detail::persistent_map;

namespace {

// Degenerate hashes to force deep subtrees and collision lists.
struct LowEntropyHash {
    std::size_t operator()(const std::string& s) const {
        return std::hash<std::string>{}(s) % 5;
    }
};
struct ConstantHash {
    std::size_t operator()(const std::string&) const { return 42; }
};

template <class Map>
void check_against(const Map& map,
                   const std::unordered_map<std::string, int>& expected) {
    REQUIRE(map.size() == expected.size());
    for (const auto& [k, v] : expected) {
        const int* got = map.get(k);
        REQUIRE(got != nullptr);
        CHECK(*got == v);
    }
    std::size_t visited = 0;
    map.for_each([&](const std::string& k, const int& v) {
        ++visited;
        auto it = expected.find(k);
        REQUIRE(it != expected.end());
        CHECK(it->second == v);
    });
    CHECK(visited == expected.size());
}

template <class Hash>
void random_ops_torture(std::uint64_t seed, int rounds, int key_space) {
    std::mt19937_64 rng(seed);
    persistent_map<std::string, int, Hash> map;
    std::unordered_map<std::string, int> model;

    // Old copies must be unaffected by later mutations.
    std::vector<persistent_map<std::string, int, Hash>> snaps;
    std::vector<std::unordered_map<std::string, int>> snap_models;

    for (int i = 0; i < rounds; ++i) {
        const std::string key = "k" + std::to_string(rng() % key_space);
        switch (rng() % 3) {
            case 0:
            case 1: {
                const int value = static_cast<int>(rng() % 1000);
                const bool added = map.set(key, value);
                CHECK(added == (model.count(key) == 0));
                model[key] = value;
                break;
            }
            case 2: {
                const bool removed = map.erase(key);
                CHECK(removed == (model.erase(key) > 0));
                break;
            }
        }
        if (i % 257 == 0) {
            snaps.push_back(map);
            snap_models.push_back(model);
        }
    }
    check_against(map, model);
    for (std::size_t i = 0; i < snaps.size(); ++i)
        check_against(snaps[i], snap_models[i]);
}

}  // namespace

TEST_SUITE("persistent_map") {

TEST_CASE("basic set/get/erase") {
    persistent_map<std::string, int> map;
    CHECK(map.empty());
    CHECK(map.get("a") == nullptr);
    CHECK(map.set("a", 1));
    CHECK_FALSE(map.set("a", 2));  // overwrite
    REQUIRE(map.get("a") != nullptr);
    CHECK(*map.get("a") == 2);
    CHECK(map.size() == 1);
    CHECK(map.erase("a"));
    CHECK_FALSE(map.erase("a"));
    CHECK(map.empty());
}

TEST_CASE("copies are independent snapshots") {
    persistent_map<std::string, int> map;
    map.set("x", 1);
    map.set("y", 2);
    persistent_map<std::string, int> snap = map;
    map.set("x", 100);
    map.erase("y");
    map.set("z", 3);
    CHECK(*snap.get("x") == 1);
    CHECK(*snap.get("y") == 2);
    CHECK(snap.get("z") == nullptr);
    CHECK(snap.size() == 2);
    CHECK(*map.get("x") == 100);
    CHECK(map.size() == 2);
}

TEST_CASE("randomized vs unordered_map, normal hash") {
    random_ops_torture<std::hash<std::string>>(7, 20000, 800);
}

TEST_CASE("randomized vs unordered_map, low-entropy hash") {
    random_ops_torture<LowEntropyHash>(11, 6000, 200);
}

TEST_CASE("randomized vs unordered_map, constant hash (collision lists)") {
    random_ops_torture<ConstantHash>(13, 2000, 60);
}

TEST_CASE("grow then shrink to empty") {
    persistent_map<std::string, int> map;
    for (int i = 0; i < 3000; ++i) map.set("key" + std::to_string(i), i);
    CHECK(map.size() == 3000);
    for (int i = 0; i < 3000; ++i) REQUIRE(map.erase("key" + std::to_string(i)));
    CHECK(map.empty());
    CHECK(map.get("key0") == nullptr);
}

}  // TEST_SUITE
