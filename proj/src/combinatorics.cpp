#include "zenofront/combinatorics.hpp"

#include <algorithm>
#include <limits>

namespace zenofront {

MulticombinationStream::MulticombinationStream(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0) throw ZenoError("multicombinations need n >= 1, k >= 0");
    reset();
}

void MulticombinationStream::reset() {
    cur_.assign(static_cast<std::size_t>(k_), 0);
    first_ = true;
    done_ = false;
}

bool MulticombinationStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = cur_;
        return true;
    }
    // Colex successor: bump the first position allowed to grow, reset prefix.
    int i = 0;
    while (i < k_) {
        int cap = (i + 1 < k_) ? cur_[i + 1] : n_ - 1;
        if (cur_[i] < cap) break;
        ++i;
    }
    if (i == k_) {
        done_ = true;
        return false;
    }
    ++cur_[i];
    std::fill(cur_.begin(), cur_.begin() + i, 0);
    out = cur_;
    return true;
}

std::uint64_t count_multicombinations(int n, int k) {
    if (n < 1 || k < 0) throw ZenoError("multicombinations need n >= 1, k >= 0");
    // C(n+k-1, k) with overflow checks.
    std::uint64_t result = 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - 1 + i);
        if (result > max / num) throw ZenoError("multicombination count overflows 64 bits");
        result = result * num / static_cast<std::uint64_t>(i);
    }
    return result;
}

KSubsetStream::KSubsetStream(int m, int k) : m_(m), k_(k), done_(false) {
    if (k < 0 || m < k || m > 63) throw ZenoError("k_subsets needs 0 <= k <= m <= 63");
    cur_ = (k == 0) ? 0 : ((std::uint64_t{1} << k) - 1);
}

bool KSubsetStream::next(std::uint64_t& out) {
    if (done_) return false;
    out = cur_;
    if (k_ == 0 || k_ == m_) {
        done_ = true;
        return true;
    }
    // Gosper's hack.
    std::uint64_t c = cur_ & (~cur_ + 1);
    std::uint64_t r = cur_ + c;
    cur_ = (((r ^ cur_) >> 2) / c) | r;
    if (cur_ >= (std::uint64_t{1} << m_)) done_ = true;
    return true;
}

SubMultisetStream::SubMultisetStream(const std::vector<int>& multiset) {
    if (multiset.size() > 63) throw ZenoError("sub_multisets capped at 63 elements");
    std::vector<int> sorted = multiset;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (!values_.empty() && values_.back() == v) {
            ++limit_.back();
        } else {
            values_.push_back(v);
            limit_.push_back(1);
        }
    }
    reset();
}

void SubMultisetStream::reset() {
    take_.assign(values_.size(), 0);
    first_ = true;
    done_ = false;
}

bool SubMultisetStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (!first_) {
        // Odometer over exponent vectors.
        std::size_t i = 0;
        while (i < take_.size() && take_[i] == limit_[i]) {
            take_[i] = 0;
            ++i;
        }
        if (i == take_.size()) {
            done_ = true;
            return false;
        }
        ++take_[i];
    }
    first_ = false;
    out.clear();
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.insert(out.end(), static_cast<std::size_t>(take_[i]), values_[i]);
    return true;
}

KSubMultisetStream::KSubMultisetStream(const std::vector<int>& multiset, int k) : k_(k) {
    if (k < 0) throw ZenoError("sub-multiset size must be nonnegative");
    std::vector<int> sorted = multiset;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (!values_.empty() && values_.back() == v) {
            ++limit_.back();
        } else {
            values_.push_back(v);
            limit_.push_back(1);
        }
    }
    take_.assign(values_.size(), 0);
    // Seed the lexicographically first take vector summing to k.
    int rest = k_;
    for (std::size_t i = 0; i < take_.size() && rest > 0; ++i) {
        take_[i] = std::min(limit_[i], rest);
        rest -= take_[i];
    }
    done_ = rest > 0;
    first_ = true;
}

bool KSubMultisetStream::advance() {
    // Bounded-composition successor: find the smallest position that can
    // absorb one unit from its prefix, then left-pack the remainder.
    const int m = static_cast<int>(take_.size());
    int prefix = 0;
    for (int j = 0; j < m; ++j) {
        if (j > 0 && prefix >= 1 && take_[j] < limit_[j]) {
            ++take_[j];
            int rest = prefix - 1;
            for (int i = 0; i < j; ++i) {
                take_[i] = std::min(limit_[i], rest);
                rest -= take_[i];
            }
            return true;
        }
        prefix += take_[j];
    }
    return false;
}

bool KSubMultisetStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (!first_ && !advance()) {
        done_ = true;
        return false;
    }
    first_ = false;
    out.clear();
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.insert(out.end(), static_cast<std::size_t>(take_[i]), values_[i]);
    return true;
}

std::vector<std::vector<int>> all_multicombinations(int n, int k) {
    std::vector<std::vector<int>> out;
    MulticombinationStream s(n, k);
    std::vector<int> item;
    while (s.next(item)) out.push_back(item);
    return out;
}

std::vector<std::vector<int>> all_sub_multisets(const std::vector<int>& ms) {
    std::vector<std::vector<int>> out;
    SubMultisetStream s(ms);
    std::vector<int> item;
    while (s.next(item)) out.push_back(item);
    return out;
}

std::vector<int> multiset_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> multiset_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int multiset_count(const std::vector<int>& ms, int value) {
    auto [lo, hi] = std::equal_range(ms.begin(), ms.end(), value);
    return static_cast<int>(hi - lo);
}

}  // namespace zenofront
