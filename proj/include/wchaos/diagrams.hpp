#pragma once

#include <array>
#include <functional>
#include <vector>

#include "wchaos/combinatorics.hpp"
#include "wchaos/symtensor.hpp"

namespace wchaos {

/// Loopless multigraph on labeled vertices 0..s-1, every vertex of degree q
/// counting multiplicity. Edges are (i, j, mult) with i < j, sorted by (i, j).
struct Multigraph {
    int s = 0;
    int q = 0;
    std::vector<std::array<int, 3>> edges;

    int edge_multiplicity(int i, int j) const;
    bool operator==(const Multigraph&) const = default;
};

// All connected members of K(s, q), lexicographic edge-list order.
// Empty when sq is odd.
std::vector<Multigraph> enumerate_K(int s, int q);

bool is_connected(const Multigraph& g);

// Number of leg-level perfect matchings projecting to g: (q!)^s / prod k_e!.
BigInt weight(const Multigraph& g);
// The same count by enumerating leg matchings directly. Feasible for sq <= 12.
BigInt weight_bruteforce(const Multigraph& g);

// Full contraction of s copies of f glued along the edges of g, evaluated by
// greedy pairwise tensor elimination. Components may be disconnected.
double graph_contraction(const SymTensor& f, const Multigraph& g);
// Ground-truth full sum over all d^(sq/2) edge-slot assignments.
double graph_contraction_bruteforce(const SymTensor& f, const Multigraph& g);

// kappa_s(I_q(f)) = sum over K(s, q) of weight * contraction.
double kappa_diagram(const SymTensor& f, int s);

// E[I_q(f)^m] as a sum over all loopless perfect leg matchings (connected or
// not). Returns 0 when mq is odd. Feasible for mq <= 12.
double moment_via_matchings(const SymTensor& f, int m);

// Enumerates every loopless perfect matching of the s*q legs, reporting the
// vertex-level projection of each as a multigraph (possibly disconnected,
// possibly with uneven degrees only when q varies -- here always q-regular).
void for_each_loopless_matching(int s, int q,
                                const std::function<void(const Multigraph&)>& fn);

}  // namespace wchaos
