#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wchaos/multi_index.hpp"

namespace wchaos {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Symmetric tensor of a given order over R^dim, stored densely on sorted
/// multi-indices. The coefficient at a sorted index is the common value of
/// the full tensor on every permutation of that index.
class SymTensor {
  public:
    SymTensor(int order, int dim)
        : order_(order), dim_(dim), coeffs_(multiindex_count(dim, order), 0.0) {
        if (order < 0 || dim < 1) throw ShapeError("SymTensor: bad shape");
    }

    static SymTensor scalar(int dim, double value) {
        SymTensor t(0, dim);
        t.coeffs_[0] = value;
        return t;
    }

    // Basis vector e_i (0-based), order 1.
    static SymTensor basis(int dim, int i) {
        SymTensor t(1, dim);
        t.coeffs_[multiindex_rank({i}, dim)] = 1.0;
        return t;
    }

    int order() const { return order_; }
    int dim() const { return dim_; }
    std::size_t size() const { return coeffs_.size(); }

    double operator[](std::size_t flat) const { return coeffs_[flat]; }
    double& operator[](std::size_t flat) { return coeffs_[flat]; }

    double at(const MultiIndex& sorted_idx) const {
        return coeffs_[multiindex_rank(sorted_idx, dim_)];
    }
    void set(const MultiIndex& sorted_idx, double v) {
        coeffs_[multiindex_rank(sorted_idx, dim_)] = v;
    }

    const std::vector<double>& coeffs() const { return coeffs_; }

  private:
    int order_;
    int dim_;
    std::vector<double> coeffs_;
};

/// Output of an order-r contraction: symmetric within each block, not across
/// blocks. Stored densely on tuples of sorted multi-indices, one per block.
class BlockTensor {
  public:
    BlockTensor(std::vector<int> block_orders, int dim);

    const std::vector<int>& block_orders() const { return block_orders_; }
    int dim() const { return dim_; }
    int total_order() const { return total_order_; }
    std::size_t size() const { return coeffs_.size(); }

    double operator[](std::size_t flat) const { return coeffs_[flat]; }
    double& operator[](std::size_t flat) { return coeffs_[flat]; }

    std::size_t rank(const std::vector<MultiIndex>& blocks) const;
    double at(const std::vector<MultiIndex>& blocks) const { return coeffs_[rank(blocks)]; }

    // Iterates entries in flat order, passing the block tuple and value.
    template <typename F>
    void for_each(F&& fn) const {
        std::vector<MultiIndex> blocks;
        for (int n : block_orders_) blocks.emplace_back(n, 0);
        for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
            fn(blocks, coeffs_[flat]);
            for (int b = static_cast<int>(blocks.size()) - 1; b >= 0; --b)
                if (next_multiindex(blocks[b], dim_)) break;
        }
    }

  private:
    std::vector<int> block_orders_;
    int dim_;
    int total_order_;
    std::vector<std::size_t> strides_;
    std::vector<double> coeffs_;
};

double inner_product(const SymTensor& f, const SymTensor& g);
BlockTensor contract(const SymTensor& f, const SymTensor& g, int r);
SymTensor symmetrize(const BlockTensor& t);
SymTensor sym_contract(const SymTensor& f, const SymTensor& g, int r);

double norm(const SymTensor& f);
double norm(const BlockTensor& t);
// <t, h> against the full (unsymmetrized) index set of t, for symmetric h.
double inner_with_sym(const BlockTensor& t, const SymTensor& h);

SymTensor scale(const SymTensor& f, double c);
SymTensor add(const SymTensor& f, const SymTensor& g);
void add_scaled_inplace(SymTensor& f, const SymTensor& g, double c);

}  // namespace wchaos
