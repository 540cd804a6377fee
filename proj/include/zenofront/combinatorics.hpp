#ifndef ZENOFRONT_COMBINATORICS_HPP
#define ZENOFRONT_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "zenofront/model.hpp"

namespace zenofront {

// Stream of k-multicombinations of {0..n-1} in colexicographic order:
// nondecreasing index tuples where the first incrementable position moves
// and everything before it resets. k = 0 yields a single empty tuple.
class MulticombinationStream {
  public:
    MulticombinationStream(int n, int k);
    bool next(std::vector<int>& out);  // false once exhausted
    void reset();

  private:
    int n_, k_;
    bool first_;
    bool done_;
    std::vector<int> cur_;
};

// C(n+k-1, k); throws ZenoError on 64-bit overflow.
std::uint64_t count_multicombinations(int n, int k);

// All C(m, k) bitmasks of width m with exactly k set bits, strictly
// increasing as integers (Gosper successor). Requires 0 <= k <= m <= 63.
class KSubsetStream {
  public:
    KSubsetStream(int m, int k);
    bool next(std::uint64_t& out);

  private:
    int m_, k_;
    bool done_;
    std::uint64_t cur_;
};

// Enumerates every sub-multiset of a sorted multiset exactly once by
// walking exponent vectors over the distinct elements.
class SubMultisetStream {
  public:
    explicit SubMultisetStream(const std::vector<int>& multiset);
    bool next(std::vector<int>& out);  // out sorted ascending
    void reset();

  private:
    std::vector<int> values_;  // distinct elements, ascending
    std::vector<int> limit_;   // multiplicities
    std::vector<int> take_;    // current exponent vector
    bool first_, done_;
};

// Distinct sub-multisets of a fixed size, enumerated by exponent vectors.
class KSubMultisetStream {
  public:
    KSubMultisetStream(const std::vector<int>& multiset, int k);
    bool next(std::vector<int>& out);  // out sorted ascending

  private:
    bool advance();
    std::vector<int> values_;
    std::vector<int> limit_;
    std::vector<int> take_;
    int k_;
    bool first_, done_;
};

// Convenience wrappers used by tests.
std::vector<std::vector<int>> all_multicombinations(int n, int k);
std::vector<std::vector<int>> all_sub_multisets(const std::vector<int>& ms);

// Sorted-multiset helpers shared by the solvers.
std::vector<int> multiset_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> multiset_difference(const std::vector<int>& a, const std::vector<int>& b);
int multiset_count(const std::vector<int>& ms, int value);

}  // namespace zenofront

#endif
