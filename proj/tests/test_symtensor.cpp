#include <doctest.h>

#include "wchaos/random_kernel.hpp"
#include "wchaos/reference.hpp"
#include "wchaos/symtensor.hpp"

using namespace wchaos;

namespace {

bool close(double a, double b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1.0});
}

BlockTensor as_single_block(const SymTensor& f) {
    BlockTensor t({f.order()}, f.dim());
    for (std::size_t i = 0; i < f.size(); ++i) t[i] = f[i];
    return t;
}

BlockTensor random_block(std::vector<int> orders, int dim, std::uint64_t seed) {
    BlockTensor t(std::move(orders), dim);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    return t;
}

}  // namespace

TEST_CASE("inner_product basics") {
    const SymTensor e1 = SymTensor::basis(2, 0);
    CHECK(inner_product(e1, e1) == doctest::Approx(1.0));

    const SymTensor c = SymTensor::scalar(3, -2.5);
    CHECK(inner_product(c, c) == doctest::Approx(6.25));

    SymTensor f(2, 2);
    f.set({0, 0}, 1.0);
    f.set({0, 1}, 0.5);
    f.set({1, 1}, 0.0);
    CHECK(inner_product(f, f) == doctest::Approx(1.5));

    CHECK_THROWS_AS(inner_product(e1, c), ShapeError);
    CHECK_THROWS_AS(inner_product(e1, SymTensor::basis(3, 0)), ShapeError);
}

TEST_CASE("inner_product matches full-sum reference") {
    for (int q = 1; q <= 4; ++q) {
        for (int d = 1; d <= 4; ++d) {
            const SymTensor f = random_kernel(q, d, 100 + 10 * q + d, false);
            const SymTensor g = random_kernel(q, d, 200 + 10 * q + d, false);
            CHECK(close(inner_product(f, g), reference::inner_product(f, g)));
        }
    }
}

TEST_CASE("contract basics") {
    // r = 0 is the plain tensor product
    const SymTensor e1 = SymTensor::basis(2, 0);
    const SymTensor e2 = SymTensor::basis(2, 1);
    const BlockTensor prod = contract(e1, e2, 0);
    CHECK(prod.at({{0}, {1}}) == doctest::Approx(1.0));
    CHECK(prod.at({{1}, {0}}) == doctest::Approx(0.0));

    // q = 2 kernels act as symmetric matrices; r = 1 is the matrix product
    SymTensor A(2, 2), B(2, 2);
    A.set({0, 0}, 1.0);
    A.set({0, 1}, 2.0);
    A.set({1, 1}, -1.0);
    B.set({0, 0}, 0.5);
    B.set({0, 1}, 3.0);
    B.set({1, 1}, 1.5);
    const BlockTensor AB = contract(A, B, 1);
    const double a[2][2] = {{1.0, 2.0}, {2.0, -1.0}};
    const double b[2][2] = {{0.5, 3.0}, {3.0, 1.5}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            double want = 0.0;
            for (int k = 0; k < 2; ++k) want += a[i][k] * b[k][j];
            CHECK(AB.at({{i}, {j}}) == doctest::Approx(want));
        }
    }

    // full contraction is the inner product
    const SymTensor f = random_kernel(3, 3, 7, false);
    const SymTensor g = random_kernel(3, 3, 8, false);
    const BlockTensor full = contract(f, g, 3);
    CHECK(full.total_order() == 0);
    CHECK(full[0] == doctest::Approx(inner_product(f, g)));

    CHECK_THROWS_AS(contract(f, g, 4), ShapeError);
    CHECK_THROWS_AS(contract(f, g, -1), ShapeError);
}

TEST_CASE("contract matches full-sum reference") {
    for (int q = 1; q <= 3; ++q) {
        for (int d = 1; d <= 3; ++d) {
            const SymTensor f = random_kernel(q, d, 300 + 10 * q + d, false);
            const SymTensor g = random_kernel(q, d, 400 + 10 * q + d, false);
            for (int r = 0; r <= q; ++r) {
                const BlockTensor fast = contract(f, g, r);
                const BlockTensor slow = reference::contract(f, g, r);
                REQUIRE(fast.size() == slow.size());
                for (std::size_t i = 0; i < fast.size(); ++i)
                    CHECK(close(fast[i], slow[i]));
            }
        }
    }
}

TEST_CASE("symmetrize basics") {
    // (1,1) blocks with t(e1; e2) = 1, t(e2; e1) = 0 average to 1/2 at (1,2)
    BlockTensor t({1, 1}, 2);
    t[t.rank({{0}, {1}})] = 1.0;
    const SymTensor s = symmetrize(t);
    CHECK(s.at({0, 1}) == doctest::Approx(0.5));
    CHECK(s.at({0, 0}) == doctest::Approx(0.0));

    // order-0 input is unchanged
    BlockTensor z({0, 0}, 3);
    z[0] = 4.25;
    CHECK(symmetrize(z)[0] == doctest::Approx(4.25));
}

TEST_CASE("symmetrize is idempotent and matches permutation average") {
    for (auto orders : {std::vector<int>{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        const BlockTensor t = random_block(orders, 3, 17 + orders[0] * 4 + orders[1]);
        const SymTensor s1 = symmetrize(t);
        const SymTensor ref = reference::symmetrize(t);
        for (std::size_t i = 0; i < s1.size(); ++i) CHECK(close(s1[i], ref[i]));

        const SymTensor s2 = symmetrize(as_single_block(s1));
        for (std::size_t i = 0; i < s1.size(); ++i) CHECK(close(s1[i], s2[i]));
    }
}

TEST_CASE("symmetrization is self-adjoint against symmetric tensors") {
    for (int r = 0; r <= 2; ++r) {
        const SymTensor f = random_kernel(2, 3, 21 + r, false);
        const SymTensor g = random_kernel(2, 3, 22 + r, false);
        const SymTensor h = random_kernel(4 - 2 * r, 3, 23 + r, false);
        const BlockTensor plain = contract(f, g, r);
        CHECK(close(inner_product(symmetrize(plain), h), inner_with_sym(plain, h)));
    }
}

TEST_CASE("contraction norm inequality chain") {
    for (int seed = 0; seed < 5; ++seed) {
        const SymTensor f = random_kernel(3, 3, 500 + seed, false);
        const SymTensor g = random_kernel(2, 3, 600 + seed, false);
        for (int r = 0; r <= 2; ++r) {
            const double plain = norm(contract(f, g, r));
            const double symm = norm(sym_contract(f, g, r));
            CHECK(symm <= plain * (1 + 1e-12));
            CHECK(plain <= norm(f) * norm(g) * (1 + 1e-12));
        }
    }
}

TEST_CASE("sym_contract examples") {
    const SymTensor e1 = SymTensor::basis(2, 0);
    const SymTensor e2 = SymTensor::basis(2, 1);
    const SymTensor s = sym_contract(e1, e2, 0);
    CHECK(s.at({0, 1}) == doctest::Approx(0.5));

    const SymTensor f = random_kernel(2, 3, 33, false);
    const SymTensor full = sym_contract(f, f, 2);
    CHECK(full[0] == doctest::Approx(norm(f) * norm(f)));

    SymTensor g(2, 1);
    g.set({0, 0}, 3.0);
    CHECK(sym_contract(g, g, 1).at({0, 0}) == doctest::Approx(9.0));
}

TEST_CASE("scale, add, norm plumbing") {
    const SymTensor f = random_kernel(2, 2, 44, false);
    CHECK(norm(SymTensor::basis(2, 0)) == doctest::Approx(1.0));
    const SymTensor z = add(f, scale(f, -1.0));
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == doctest::Approx(0.0));
    const SymTensor zero = scale(f, 0.0);
    for (std::size_t i = 0; i < zero.size(); ++i) CHECK(zero[i] == 0.0);
    CHECK_THROWS_AS(add(f, random_kernel(3, 2, 1, false)), ShapeError);
}
