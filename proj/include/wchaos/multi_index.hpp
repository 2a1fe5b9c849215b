#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "wchaos/combinatorics.hpp"

namespace wchaos {

// A sorted (non-decreasing) multi-index with 0-based values in [0, dim).
using MultiIndex = std::vector<int>;

inline bool is_sorted_index(const MultiIndex& a, int dim) {
    int prev = 0;
    for (int v : a) {
        if (v < prev || v >= dim) return false;
        prev = v;
    }
    return true;
}

// Number of non-decreasing sequences of the given order over [0, dim):
// C(dim + order - 1, order).
inline std::size_t multiindex_count(int dim, int order) {
    BigInt c = binomial(dim + order - 1, order);
    return static_cast<std::size_t>(c.convert_to<unsigned long long>());
}

// Lexicographic rank of a sorted multi-index among all sorted multi-indices
// of the same order over [0, dim).
inline std::size_t multiindex_rank(const MultiIndex& a, int dim) {
    std::size_t rank = 0;
    int prev = 0;
    const int q = static_cast<int>(a.size());
    for (int p = 0; p < q; ++p) {
        for (int v = prev; v < a[p]; ++v)
            rank += multiindex_count(dim - v, q - p - 1);
        prev = a[p];
    }
    return rank;
}

// Advances to the next sorted multi-index in lexicographic order.
// Returns false (leaving `a` at the first index) after the last one.
inline bool next_multiindex(MultiIndex& a, int dim) {
    const int q = static_cast<int>(a.size());
    for (int p = q - 1; p >= 0; --p) {
        if (a[p] < dim - 1) {
            ++a[p];
            for (int j = p + 1; j < q; ++j) a[j] = a[p];
            return true;
        }
    }
    std::fill(a.begin(), a.end(), 0);
    return false;
}

// Per-value multiplicities of a sorted multi-index, as (value, count) pairs.
inline std::vector<std::pair<int, int>> value_multiplicities(const MultiIndex& a) {
    std::vector<std::pair<int, int>> m;
    for (int v : a) {
        if (!m.empty() && m.back().first == v)
            ++m.back().second;
        else
            m.emplace_back(v, 1);
    }
    return m;
}

// Number of distinct orderings of the multiset `a`: order! / prod(mult!).
inline BigInt multiset_permutations_exact(const MultiIndex& a) {
    BigInt r = factorial(static_cast<int>(a.size()));
    for (const auto& [v, k] : value_multiplicities(a)) r /= factorial(k);
    return r;
}

inline double multiset_permutations(const MultiIndex& a) {
    return to_double(multiset_permutations_exact(a));
}

inline MultiIndex merge_sorted(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
    return out;
}

}  // namespace wchaos
