#include <random>
#include <set>

#include "doctest.h"
#include "zenofront/combinatorics.hpp"

using namespace zenofront;

TEST_CASE("multicombinations of singletons") {
    auto items = all_multicombinations(3, 1);
    REQUIRE(items.size() == 3);
    CHECK(items[0] == std::vector<int>{0});
    CHECK(items[1] == std::vector<int>{1});
    CHECK(items[2] == std::vector<int>{2});
}

TEST_CASE("multicombination stream is colexicographic and duplicate-free") {
    auto items = all_multicombinations(3, 2);
    REQUIRE(items.size() == 6);
    CHECK(items == std::vector<std::vector<int>>{
                       {0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}});
}

TEST_CASE("k = 0 yields a single empty tuple") {
    auto items = all_multicombinations(4, 0);
    REQUIRE(items.size() == 1);
    CHECK(items[0].empty());
}

TEST_CASE("stream length equals the closed form for all small shapes") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k) {
            auto items = all_multicombinations(n, k);
            CHECK(items.size() == count_multicombinations(n, k));
            std::set<std::vector<int>> distinct(items.begin(), items.end());
            CHECK(distinct.size() == items.size());
            for (const auto& item : items)
                CHECK(std::is_sorted(item.begin(), item.end()));
        }
}

TEST_CASE("multicombination counts") {
    CHECK(count_multicombinations(3, 2) == 6);
    CHECK(count_multicombinations(7, 7) == 1716);
    CHECK(count_multicombinations(1, 5) == 1);
    // Table-sized products used by the solvers.
    CHECK(count_multicombinations(3, 3) * count_multicombinations(3, 1) == 30);
    CHECK(count_multicombinations(3, 4) == 15);
}

TEST_CASE("multicombination count overflow is reported") {
    CHECK_THROWS_AS(count_multicombinations(1000000, 60), ZenoError);
}

TEST_CASE("k-subset masks are increasing with fixed popcount") {
    KSubsetStream s(3, 2);
    std::uint64_t m;
    std::vector<std::uint64_t> masks;
    while (s.next(m)) masks.push_back(m);
    CHECK(masks == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
}

TEST_CASE("k-subsets of size zero") {
    KSubsetStream s(4, 0);
    std::uint64_t m;
    REQUIRE(s.next(m));
    CHECK(m == 0);
    CHECK_FALSE(s.next(m));
}

TEST_CASE("k-subsets (10, 5)") {
    KSubsetStream s(10, 5);
    std::uint64_t m;
    std::set<std::uint64_t> seen;
    std::uint64_t prev = 0;
    bool first = true;
    while (s.next(m)) {
        CHECK(__builtin_popcountll(m) == 5);
        if (!first) CHECK(m > prev);
        prev = m;
        first = false;
        seen.insert(m);
    }
    CHECK(seen.size() == 252);
}

TEST_CASE("sub-multisets deduplicate repeated elements") {
    CHECK(all_sub_multisets({1, 2}).size() == 4);
    CHECK(all_sub_multisets({1, 1}).size() == 3);
    CHECK(all_sub_multisets({1, 1, 2}).size() == 6);
    auto subs = all_sub_multisets({1, 1});
    std::set<std::vector<int>> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == 3);
}

TEST_CASE("sub-multiset stream covers every distinct sub-multiset once") {
    std::vector<int> ms = {0, 0, 1, 2, 2, 2};
    auto subs = all_sub_multisets(ms);
    CHECK(subs.size() == 3u * 2u * 4u);
    std::set<std::vector<int>> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == subs.size());
}

TEST_CASE("multiset helpers") {
    std::vector<int> a = {0, 1, 1, 2}, b = {1, 2, 2};
    CHECK(multiset_intersection(a, b) == std::vector<int>{1, 2});
    CHECK(multiset_difference(a, b) == std::vector<int>{0, 1});
    CHECK(multiset_count(a, 1) == 2);
}

TEST_CASE("fixed-size sub-multiset stream matches the filtered powerset") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        std::vector<int> ms;
        const int len = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i) ms.push_back(static_cast<int>(rng() % 4));
        std::sort(ms.begin(), ms.end());
        for (int k = 0; k <= len; ++k) {
            std::set<std::vector<int>> expect;
            for (const auto& sub : all_sub_multisets(ms))
                if (static_cast<int>(sub.size()) == k) expect.insert(sub);
            std::set<std::vector<int>> got;
            KSubMultisetStream s(ms, k);
            std::vector<int> item;
            std::size_t count = 0;
            while (s.next(item)) {
                got.insert(item);
                ++count;
            }
            CHECK(count == got.size());  // no duplicates
            CHECK(got == expect);
        }
    }
}
