#include "wchaos/diagrams.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wchaos {

int Multigraph::edge_multiplicity(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges)
        if (e[0] == i && e[1] == j) return e[2];
    return 0;
}

bool is_connected(const Multigraph& g) {
    if (g.s <= 1) return true;
    std::vector<int> parent(g.s);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) parent[find(e[0])] = find(e[1]);
    for (int v = 1; v < g.s; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

std::vector<Multigraph> enumerate_K(int s, int q) {
    if (s < 2 || q < 2) throw std::invalid_argument("enumerate_K: need s >= 2, q >= 2");
    std::vector<Multigraph> out;
    if ((s * q) % 2 != 0) return out;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) pairs.emplace_back(i, j);

    std::vector<int> res(s, q);
    Multigraph g{s, q, {}};
    auto dfs = [&](auto&& self, std::size_t t) -> void {
        if (t == pairs.size()) {
            for (int v = 0; v < s; ++v)
                if (res[v] != 0) return;
            if (is_connected(g)) out.push_back(g);
            return;
        }
        const auto [i, j] = pairs[t];
        const bool last_for_i = (j == s - 1);
        int lo = 0, hi = std::min(res[i], res[j]);
        if (last_for_i) lo = hi = res[i];  // degree of i must close out here
        for (int m = lo; m <= hi; ++m) {
            if (m > std::min(res[i], res[j])) break;
            res[i] -= m;
            res[j] -= m;
            if (m > 0) g.edges.push_back({i, j, m});
            self(self, t + 1);
            if (m > 0) g.edges.pop_back();
            res[i] += m;
            res[j] += m;
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(),
              [](const Multigraph& a, const Multigraph& b) { return a.edges < b.edges; });
    return out;
}

BigInt weight(const Multigraph& g) {
    BigInt num = 1;
    for (int v = 0; v < g.s; ++v) num *= factorial(g.q);
    for (const auto& e : g.edges) num /= factorial(e[2]);
    return num;
}

void for_each_loopless_matching(int s, int q,
                                const std::function<void(const Multigraph&)>& fn) {
    const int legs = s * q;
    if (legs % 2 != 0) return;
    std::vector<int> mate(legs, -1);
    std::vector<std::vector<int>> counts(s, std::vector<int>(s, 0));

    auto dfs = [&](auto&& self, int from) -> void {
        int u = from;
        while (u < legs && mate[u] != -1) ++u;
        if (u == legs) {
            Multigraph g{s, q, {}};
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j)
                    if (counts[i][j] > 0) g.edges.push_back({i, j, counts[i][j]});
            fn(g);
            return;
        }
        const int vu = u / q;
        for (int v = u + 1; v < legs; ++v) {
            if (mate[v] != -1 || v / q == vu) continue;
            mate[u] = v;
            mate[v] = u;
            ++counts[vu][v / q];
            self(self, u + 1);
            --counts[vu][v / q];
            mate[u] = mate[v] = -1;
        }
    };
    dfs(dfs, 0);
}

BigInt weight_bruteforce(const Multigraph& g) {
    BigInt count = 0;
    for_each_loopless_matching(g.s, g.q, [&](const Multigraph& proj) {
        if (proj == g) ++count;
    });
    return count;
}

namespace {

// A dense factor of the edge-slot network: one axis (of size d) per variable.
struct Factor {
    std::vector<int> vars;
    std::vector<double> data;
};

double network_value(std::vector<Factor> factors, int d) {
    auto contract_pair = [&](const Factor& a, const Factor& b) {
        Factor out;
        std::vector<int> shared;
        for (int v : a.vars)
            if (std::find(b.vars.begin(), b.vars.end(), v) != b.vars.end())
                shared.push_back(v);
        for (int v : a.vars)
            if (std::find(shared.begin(), shared.end(), v) == shared.end())
                out.vars.push_back(v);
        for (int v : b.vars)
            if (std::find(shared.begin(), shared.end(), v) == shared.end())
                out.vars.push_back(v);

        std::size_t out_size = 1;
        for (std::size_t i = 0; i < out.vars.size(); ++i) out_size *= d;
        out.data.assign(out_size, 0.0);

        std::size_t shared_size = 1;
        for (std::size_t i = 0; i < shared.size(); ++i) shared_size *= d;

        auto index_of = [&](const Factor& f, const std::vector<int>& assign_vars,
                            const std::vector<int>& assign_vals) {
            std::size_t idx = 0;
            for (int v : f.vars) {
                const auto it = std::find(assign_vars.begin(), assign_vars.end(), v);
                idx = idx * d + assign_vals[it - assign_vars.begin()];
            }
            return idx;
        };

        std::vector<int> all_vars = out.vars;
        all_vars.insert(all_vars.end(), shared.begin(), shared.end());
        std::vector<int> vals(all_vars.size(), 0);
        for (std::size_t oi = 0; oi < out_size; ++oi) {
            // decode out assignment
            std::size_t rem = oi;
            for (int p = static_cast<int>(out.vars.size()) - 1; p >= 0; --p) {
                vals[p] = static_cast<int>(rem % d);
                rem /= d;
            }
            double acc = 0.0;
            for (std::size_t si = 0; si < shared_size; ++si) {
                std::size_t srem = si;
                for (int p = static_cast<int>(all_vars.size()) - 1;
                     p >= static_cast<int>(out.vars.size()); --p) {
                    vals[p] = static_cast<int>(srem % d);
                    srem /= d;
                }
                acc += a.data[index_of(a, all_vars, vals)] * b.data[index_of(b, all_vars, vals)];
            }
            out.data[oi] = acc;
        }
        return out;
    };

    while (factors.size() > 1) {
        // greedy: contract the pair with the smallest resulting order
        std::size_t bi = 0, bj = 1;
        int best = INT32_MAX;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                int shared = 0;
                for (int v : factors[i].vars)
                    if (std::find(factors[j].vars.begin(), factors[j].vars.end(), v) !=
                        factors[j].vars.end())
                        ++shared;
                const int order = static_cast<int>(factors[i].vars.size() +
                                                   factors[j].vars.size()) - 2 * shared;
                if (order < best) {
                    best = order;
                    bi = i;
                    bj = j;
                }
            }
        }
        Factor merged = contract_pair(factors[bi], factors[bj]);
        factors.erase(factors.begin() + bj);
        factors[bi] = std::move(merged);
    }
    return factors[0].data[0];
}

std::vector<Factor> build_network(const SymTensor& f, const Multigraph& g) {
    const int d = f.dim();
    const int q = g.q;
    // one variable per edge slot, shared by the two endpoint copies of f
    std::vector<std::vector<int>> vertex_vars(g.s);
    int next_var = 0;
    for (const auto& e : g.edges) {
        for (int c = 0; c < e[2]; ++c) {
            vertex_vars[e[0]].push_back(next_var);
            vertex_vars[e[1]].push_back(next_var);
            ++next_var;
        }
    }
    std::vector<Factor> factors;
    for (int v = 0; v < g.s; ++v) {
        if (static_cast<int>(vertex_vars[v].size()) != q)
            throw ShapeError("graph_contraction: vertex degree != q");
        Factor fac;
        fac.vars = vertex_vars[v];
        std::size_t sz = 1;
        for (int i = 0; i < q; ++i) sz *= d;
        fac.data.resize(sz);
        std::vector<int> tuple(q, 0);
        for (std::size_t flat = 0; flat < sz; ++flat) {
            std::size_t rem = flat;
            for (int p = q - 1; p >= 0; --p) {
                tuple[p] = static_cast<int>(rem % d);
                rem /= d;
            }
            MultiIndex sorted_idx = tuple;
            std::sort(sorted_idx.begin(), sorted_idx.end());
            fac.data[flat] = f.at(sorted_idx);
        }
        factors.push_back(std::move(fac));
    }
    return factors;
}

}  // namespace

double graph_contraction(const SymTensor& f, const Multigraph& g) {
    if (f.order() != g.q) throw ShapeError("graph_contraction: kernel order != graph degree");
    return network_value(build_network(f, g), f.dim());
}

double graph_contraction_bruteforce(const SymTensor& f, const Multigraph& g) {
    if (f.order() != g.q) throw ShapeError("graph_contraction: kernel order != graph degree");
    const int d = f.dim();
    int slots = 0;
    for (const auto& e : g.edges) slots += e[2];
    std::vector<std::vector<int>> vertex_slots(g.s);
    int slot = 0;
    for (const auto& e : g.edges)
        for (int c = 0; c < e[2]; ++c) {
            vertex_slots[e[0]].push_back(slot);
            vertex_slots[e[1]].push_back(slot);
            ++slot;
        }

    double acc = 0.0;
    std::vector<int> assign(slots, 0);
    while (true) {
        double prod = 1.0;
        for (int v = 0; v < g.s && prod != 0.0; ++v) {
            MultiIndex idx;
            for (int sl : vertex_slots[v]) idx.push_back(assign[sl]);
            std::sort(idx.begin(), idx.end());
            prod *= f.at(idx);
        }
        acc += prod;
        int p = slots - 1;
        while (p >= 0 && assign[p] == d - 1) assign[p--] = 0;
        if (p < 0) break;
        ++assign[p];
    }
    return acc;
}

double kappa_diagram(const SymTensor& f, int s) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("kappa_diagram: kernel order must be >= 2");
    if (s < 2) throw std::invalid_argument("kappa_diagram: s must be >= 2");
    if ((s * q) % 2 != 0) return 0.0;

    const auto graphs = enumerate_K(s, q);
    std::vector<double> vals(graphs.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(graphs.size()); ++i)
        vals[i] = to_double(weight(graphs[i])) * graph_contraction(f, graphs[i]);
    double acc = 0.0;
    for (double v : vals) acc += v;  // fixed-order reduction
    return acc;
}

double moment_via_matchings(const SymTensor& f, int m) {
    if (m < 1) throw std::invalid_argument("moment_via_matchings: m must be >= 1");
    const int q = f.order();
    if ((m * q) % 2 != 0) return 0.0;
    double acc = 0.0;
    for_each_loopless_matching(m, q, [&](const Multigraph& proj) {
        acc += graph_contraction(f, proj);
    });
    return acc;
}

}  // namespace wchaos
