#include "wchaos/symtensor.hpp"

#include <cmath>

namespace wchaos {

namespace {

std::vector<MultiIndex> all_multiindices(int dim, int order) {
    std::vector<MultiIndex> out;
    out.reserve(multiindex_count(dim, order));
    MultiIndex a(order, 0);
    do {
        out.push_back(a);
    } while (next_multiindex(a, dim));
    return out;
}

}  // namespace

BlockTensor::BlockTensor(std::vector<int> block_orders, int dim)
    : block_orders_(std::move(block_orders)), dim_(dim), total_order_(0) {
    if (dim < 1) throw ShapeError("BlockTensor: bad dim");
    std::size_t sz = 1;
    strides_.assign(block_orders_.size(), 1);
    for (int b = static_cast<int>(block_orders_.size()) - 1; b >= 0; --b) {
        if (block_orders_[b] < 0) throw ShapeError("BlockTensor: negative block order");
        strides_[b] = sz;
        sz *= multiindex_count(dim_, block_orders_[b]);
        total_order_ += block_orders_[b];
    }
    coeffs_.assign(sz, 0.0);
}

std::size_t BlockTensor::rank(const std::vector<MultiIndex>& blocks) const {
    std::size_t flat = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        flat += strides_[b] * multiindex_rank(blocks[b], dim_);
    return flat;
}

double inner_product(const SymTensor& f, const SymTensor& g) {
    if (f.order() != g.order() || f.dim() != g.dim())
        throw ShapeError("inner_product: order/dim mismatch");
    double acc = 0.0;
    MultiIndex a(f.order(), 0);
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        if (f[flat] != 0.0 && g[flat] != 0.0)
            acc += multiset_permutations(a) * f[flat] * g[flat];
        next_multiindex(a, f.dim());
    }
    return acc;
}

BlockTensor contract(const SymTensor& f, const SymTensor& g, int r) {
    if (f.dim() != g.dim()) throw ShapeError("contract: dim mismatch");
    const int p = f.order(), q = g.order(), d = f.dim();
    if (r < 0 || r > std::min(p, q)) throw ShapeError("contract: r out of range");

    BlockTensor out({p - r, q - r}, d);
    const auto as = all_multiindices(d, p - r);
    const auto bs = all_multiindices(d, q - r);
    const auto ks = all_multiindices(d, r);
    std::vector<double> kw(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) kw[i] = multiset_permutations(ks[i]);

    const std::size_t nb = bs.size();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ia = 0; ia < static_cast<std::ptrdiff_t>(as.size()); ++ia) {
        for (std::size_t ib = 0; ib < nb; ++ib) {
            double acc = 0.0;
            for (std::size_t ik = 0; ik < ks.size(); ++ik) {
                const double fv = f.at(merge_sorted(as[ia], ks[ik]));
                if (fv == 0.0) continue;
                acc += kw[ik] * fv * g.at(merge_sorted(bs[ib], ks[ik]));
            }
            out[static_cast<std::size_t>(ia) * nb + ib] = acc;
        }
    }
    return out;
}

SymTensor symmetrize(const BlockTensor& t) {
    const int n = t.total_order();
    const int d = t.dim();
    SymTensor out(n, d);

    // Each stored block tuple scatters onto its merged multiset gamma with
    // weight  (prod n_j!) (prod_i m_i(gamma)!) / (n! prod_{i,j} m_i^{(j)}!),
    // the fraction of permutations of gamma realizing that block split.
    BigInt num_blocks = 1;
    for (int nj : t.block_orders()) num_blocks *= factorial(nj);
    const BigInt n_fact = factorial(n);

    t.for_each([&](const std::vector<MultiIndex>& blocks, double v) {
        if (v == 0.0) return;
        MultiIndex gamma;
        BigInt den = n_fact;
        for (const auto& blk : blocks) {
            gamma = merge_sorted(gamma, blk);
            for (const auto& [val, k] : value_multiplicities(blk)) den *= factorial(k);
        }
        BigInt num = num_blocks;
        for (const auto& [val, k] : value_multiplicities(gamma)) num *= factorial(k);
        const double w = to_double(num) / to_double(den);
        out[multiindex_rank(gamma, d)] += w * v;
    });
    return out;
}

SymTensor sym_contract(const SymTensor& f, const SymTensor& g, int r) {
    return symmetrize(contract(f, g, r));
}

double norm(const SymTensor& f) {
    return std::sqrt(inner_product(f, f));
}

double norm(const BlockTensor& t) {
    double acc = 0.0;
    t.for_each([&](const std::vector<MultiIndex>& blocks, double v) {
        if (v == 0.0) return;
        double w = 1.0;
        for (const auto& blk : blocks) w *= multiset_permutations(blk);
        acc += w * v * v;
    });
    return std::sqrt(acc);
}

double inner_with_sym(const BlockTensor& t, const SymTensor& h) {
    if (t.total_order() != h.order() || t.dim() != h.dim())
        throw ShapeError("inner_with_sym: order/dim mismatch");
    double acc = 0.0;
    t.for_each([&](const std::vector<MultiIndex>& blocks, double v) {
        if (v == 0.0) return;
        double w = 1.0;
        MultiIndex gamma;
        for (const auto& blk : blocks) {
            w *= multiset_permutations(blk);
            gamma = merge_sorted(gamma, blk);
        }
        acc += w * v * h.at(gamma);
    });
    return acc;
}

SymTensor scale(const SymTensor& f, double c) {
    SymTensor out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= c;
    return out;
}

SymTensor add(const SymTensor& f, const SymTensor& g) {
    if (f.order() != g.order() || f.dim() != g.dim())
        throw ShapeError("add: order/dim mismatch");
    SymTensor out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g[i];
    return out;
}

void add_scaled_inplace(SymTensor& f, const SymTensor& g, double c) {
    if (f.order() != g.order() || f.dim() != g.dim())
        throw ShapeError("add_scaled_inplace: order/dim mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += c * g[i];
}

}  // namespace wchaos
