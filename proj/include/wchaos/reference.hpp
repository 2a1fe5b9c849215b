#pragma once

#include <algorithm>

#include "wchaos/symtensor.hpp"

namespace wchaos::reference {

// Serial brute-force implementations over full (unsorted) index tuples.
// They are the ground truth for the dense kernels and the serial side of
// the benchmark; keep them free of any shortcut used by the fast paths.

template <typename F>
void for_each_tuple(int dim, int order, F&& fn) {
    std::vector<int> x(order, 0);
    while (true) {
        fn(x);
        int p = order - 1;
        while (p >= 0 && x[p] == dim - 1) x[p--] = 0;
        if (p < 0) return;
        ++x[p];
    }
}

inline double value_at(const SymTensor& f, std::vector<int> tuple) {
    std::sort(tuple.begin(), tuple.end());
    return f.at(tuple);
}

inline double inner_product(const SymTensor& f, const SymTensor& g) {
    double acc = 0.0;
    for_each_tuple(f.dim(), f.order(), [&](const std::vector<int>& x) {
        acc += value_at(f, x) * value_at(g, x);
    });
    return acc;
}

inline BlockTensor contract(const SymTensor& f, const SymTensor& g, int r) {
    const int p = f.order(), q = g.order(), d = f.dim();
    BlockTensor out({p - r, q - r}, d);
    MultiIndex a(p - r, 0);
    do {
        MultiIndex b(q - r, 0);
        do {
            double acc = 0.0;
            for_each_tuple(d, r, [&](const std::vector<int>& k) {
                MultiIndex fa = a, gb = b;
                fa.insert(fa.end(), k.begin(), k.end());
                gb.insert(gb.end(), k.begin(), k.end());
                acc += value_at(f, fa) * value_at(g, gb);
            });
            out[out.rank({a, b})] = acc;
        } while (next_multiindex(b, d));
    } while (next_multiindex(a, d));
    return out;
}

// Average over all distinct arrangements of the merged index multiset.
inline SymTensor symmetrize(const BlockTensor& t) {
    const int n = t.total_order();
    const int d = t.dim();
    SymTensor out(n, d);
    MultiIndex gamma(n, 0);
    do {
        MultiIndex perm = gamma;
        double acc = 0.0;
        long count = 0;
        do {
            std::vector<MultiIndex> blocks;
            std::size_t pos = 0;
            for (int nb : t.block_orders()) {
                MultiIndex blk(perm.begin() + pos, perm.begin() + pos + nb);
                std::sort(blk.begin(), blk.end());
                blocks.push_back(std::move(blk));
                pos += nb;
            }
            acc += t.at(blocks);
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.set(gamma, acc / static_cast<double>(count));
    } while (next_multiindex(gamma, d));
    return out;
}

}  // namespace wchaos::reference
